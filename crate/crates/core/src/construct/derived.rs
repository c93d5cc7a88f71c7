//! Rings derived from existing ones: quotients by two-sided ideals and
//! subrings generated by element sets.

use super::ConstructError;
use crate::ideals::{IdealSet, Sidedness};
use crate::ring::{ElementId, FiniteRing};
use crate::set::ElemSet;

/// The coset ring R/I together with the projection map. Coset `k` is the
/// coset whose least member is the `k`-th smallest among all coset
/// representatives, so the coset of 0 (that is, I itself) is index 0.
pub fn quotient(
    r: &FiniteRing,
    ideal: &IdealSet<'_>,
) -> Result<(FiniteRing, Vec<usize>), ConstructError> {
    if ideal.sidedness() != Sidedness::TwoSided || !ideal.verify() {
        return Err(ConstructError::NotTwoSided);
    }
    let n = r.order();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<ElementId> = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for i in ideal.iter() {
            class[r.add(x, i)] = id;
        }
    }
    let add = |a: usize, b: usize| class[r.add(reps[a], reps[b])];
    let mul = |a: usize, b: usize| class[r.mul(reps[a], reps[b])];
    let one = class[r.one()];
    let q = FiniteRing::build_with(reps.len(), one, None, add, mul);
    Ok((q, class))
}

/// A generated subset that closed up into a ring, or a closed subset with no
/// multiplicative identity of its own.
#[derive(Clone, Debug)]
pub enum SubringOutcome {
    /// The closure carries an identity (the ambient one, or an idempotent
    /// acting as identity on the closure). `embedding[i]` is the parent
    /// index of subring element `i`.
    Ring {
        ring: FiniteRing,
        embedding: Vec<ElementId>,
    },
    /// Closed under add, neg and mul, but without a multiplicative identity.
    NonUnital(ElemSet),
}

/// Closure of `seed` (plus the ambient 1 when `include_one`) under addition,
/// negation and multiplication.
pub fn subring_generated(r: &FiniteRing, seed: &[ElementId], include_one: bool) -> SubringOutcome {
    assert!(!seed.is_empty() || include_one, "empty generating set");
    let mut members = ElemSet::singleton(r.order(), 0);
    let mut work: Vec<ElementId> = Vec::new();
    let push = |members: &mut ElemSet, work: &mut Vec<ElementId>, x: ElementId| {
        if members.insert(x) {
            work.push(x);
        }
    };
    for &s in seed {
        push(&mut members, &mut work, s);
    }
    if include_one {
        push(&mut members, &mut work, r.one());
    }
    while let Some(x) = work.pop() {
        push(&mut members, &mut work, r.neg(x));
        for y in members.to_vec() {
            push(&mut members, &mut work, r.add(x, y));
            push(&mut members, &mut work, r.mul(x, y));
            push(&mut members, &mut work, r.mul(y, x));
        }
    }
    match subring_from_subset(r, &members) {
        Ok((ring, embedding)) => SubringOutcome::Ring { ring, embedding },
        Err(_) => SubringOutcome::NonUnital(members),
    }
}

/// Re-indexes a closed subset into a standalone ring. Fails if the subset is
/// not closed or has no internal multiplicative identity. The identity may
/// be an idempotent different from the ambient 1 (e.g. a corner subring).
pub fn subring_from_subset(
    r: &FiniteRing,
    subset: &ElemSet,
) -> Result<(FiniteRing, Vec<ElementId>), ConstructError> {
    let emb: Vec<ElementId> = subset.to_vec();
    if emb.is_empty() || emb[0] != 0 {
        return Err(ConstructError::NotClosed(vec![0]));
    }
    let mut back = vec![usize::MAX; r.order()];
    for (i, &e) in emb.iter().enumerate() {
        back[e] = i;
    }
    for &a in &emb {
        if back[r.neg(a)] == usize::MAX {
            return Err(ConstructError::NotClosed(vec![a]));
        }
        for &b in &emb {
            if back[r.add(a, b)] == usize::MAX || back[r.mul(a, b)] == usize::MAX {
                return Err(ConstructError::NotClosed(vec![a, b]));
            }
        }
    }
    let internal_one = emb
        .iter()
        .copied()
        .find(|&u| emb.iter().all(|&x| r.mul(u, x) == x && r.mul(x, u) == x));
    let Some(one_parent) = internal_one else {
        return Err(ConstructError::NotClosed(vec![]));
    };
    let ring = FiniteRing::build_with(
        emb.len(),
        back[one_parent],
        None,
        |a, b| back[r.add(emb[a], emb[b])],
        |a, b| back[r.mul(emb[a], emb[b])],
    );
    Ok((ring, emb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix_ring, zmod, OrderCap};
    use crate::ideals::ideal_generated;

    #[test]
    fn z4_mod_two_is_z2() {
        let z4 = zmod(4, OrderCap::default()).unwrap();
        let i = ideal_generated(&z4, 2, Sidedness::TwoSided);
        let (q, proj) = quotient(&z4, &i).unwrap();
        let z2 = zmod(2, OrderCap::default()).unwrap();
        assert_eq!(q.mul_table(), z2.mul_table());
        assert_eq!(q.add_table(), z2.add_table());
        assert_eq!(proj, vec![0, 1, 0, 1]);
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let z6 = zmod(6, OrderCap::default()).unwrap();
        let zero = IdealSet::zero(&z6);
        let (q, proj) = quotient(&z6, &zero).unwrap();
        assert_eq!(q.mul_table(), z6.mul_table());
        assert_eq!(proj, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_rejects_one_sided() {
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let m2 = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        let e11_right = ideal_generated(&m2, 1, Sidedness::Right);
        assert!(quotient(&m2, &e11_right).is_err());
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let z4 = zmod(4, OrderCap::default()).unwrap();
        let i = ideal_generated(&z4, 2, Sidedness::TwoSided);
        let (q, proj) = quotient(&z4, &i).unwrap();
        for a in z4.elements() {
            for b in z4.elements() {
                assert_eq!(proj[z4.add(a, b)], q.add(proj[a], proj[b]));
                assert_eq!(proj[z4.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
        assert_eq!(proj[z4.one()], q.one());
    }

    #[test]
    fn two_generates_nonunital_subset_of_z4() {
        let z4 = zmod(4, OrderCap::default()).unwrap();
        match subring_generated(&z4, &[2], false) {
            SubringOutcome::NonUnital(s) => assert_eq!(s.to_vec(), vec![0, 2]),
            SubringOutcome::Ring { .. } => panic!("{{0,2}} has no identity"),
        }
    }

    #[test]
    fn one_generates_prime_subring() {
        let z6 = zmod(6, OrderCap::default()).unwrap();
        match subring_generated(&z6, &[z6.one()], true) {
            SubringOutcome::Ring { ring, embedding } => {
                assert_eq!(ring.order(), 6, "1 generates all of Z6 additively");
                assert_eq!(embedding, vec![0, 1, 2, 3, 4, 5]);
            }
            SubringOutcome::NonUnital(_) => panic!("must be a ring"),
        }
    }

    #[test]
    fn diagonal_subring_of_m2() {
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let m2 = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        let (e11, e22) = (1, 8);
        match subring_generated(&m2, &[e11, e22], true) {
            SubringOutcome::Ring { ring, embedding } => {
                assert_eq!(ring.order(), 4);
                assert_eq!(embedding, vec![0, e11, e22, e11 + e22]);
                assert!(ring.is_commutative());
            }
            SubringOutcome::NonUnital(_) => panic!("diagonal subring has the identity"),
        }
    }

    #[test]
    fn corner_subring_gets_internal_identity() {
        // {0, e11} is closed and e11 acts as its identity even though it is
        // not the ambient identity.
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let m2 = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        let subset = ElemSet::from_indices(16, [0, 1]);
        let (ring, emb) = subring_from_subset(&m2, &subset).unwrap();
        assert_eq!(ring.order(), 2);
        assert_eq!(ring.one(), 1);
        assert_eq!(emb, vec![0, 1]);
    }

    #[test]
    fn embedding_preserves_operations() {
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let m2 = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        if let SubringOutcome::Ring { ring, embedding } = subring_generated(&m2, &[2, 4], true) {
            for a in ring.elements() {
                for b in ring.elements() {
                    assert_eq!(embedding[ring.add(a, b)], m2.add(embedding[a], embedding[b]));
                    assert_eq!(embedding[ring.mul(a, b)], m2.mul(embedding[a], embedding[b]));
                }
            }
        } else {
            panic!("e12, e21 and 1 generate a unital subring");
        }
    }
}
