//! Ideal subsets of a finite ring: closures, products, nilpotency data, and
//! exhaustive ideal-lattice enumeration for the small-order oracles.

use crate::ring::{ElementId, FiniteRing};
use crate::set::ElemSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
    AdditiveOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("operation requires a two-sided ideal, got {0:?}")]
    NotTwoSided(Sidedness),
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("the improper ideal (the whole ring) is rejected here")]
    Improper,
    #[error("order {order} exceeds the oracle cap {cap}")]
    OracleCap { order: usize, cap: usize },
}

/// A subset of a ring's elements with a sidedness tag. Instances built by
/// the functions in this module are genuinely closed for their tag.
#[derive(Clone, Debug)]
pub struct IdealSet<'r> {
    ring: &'r FiniteRing,
    members: ElemSet,
    sidedness: Sidedness,
}

impl<'r> PartialEq for IdealSet<'r> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.members == other.members
    }
}
impl<'r> Eq for IdealSet<'r> {}

impl<'r> IdealSet<'r> {
    /// Wraps an existing member set, verifying closure for the claimed
    /// sidedness. Panics if the subset is not closed (callers constructing
    /// ideals by hand should use the closure functions instead).
    pub fn new(ring: &'r FiniteRing, members: ElemSet, sidedness: Sidedness) -> IdealSet<'r> {
        let ideal = IdealSet {
            ring,
            members,
            sidedness,
        };
        assert!(ideal.verify(), "subset is not closed for {sidedness:?}");
        ideal
    }

    pub fn zero(ring: &'r FiniteRing) -> IdealSet<'r> {
        IdealSet {
            ring,
            members: ElemSet::singleton(ring.order(), 0),
            sidedness: Sidedness::TwoSided,
        }
    }

    pub fn full(ring: &'r FiniteRing) -> IdealSet<'r> {
        IdealSet {
            ring,
            members: ElemSet::full(ring.order()),
            sidedness: Sidedness::TwoSided,
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1 && self.members.contains(0)
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.ring.order()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.members.to_vec()
    }

    /// Re-checks the closure properties for the claimed sidedness.
    pub fn verify(&self) -> bool {
        let r = self.ring;
        let m = &self.members;
        if !m.contains(0) {
            return false;
        }
        for a in m.iter() {
            if !m.contains(r.neg(a)) {
                return false;
            }
            for b in m.iter() {
                if !m.contains(r.add(a, b)) {
                    return false;
                }
            }
        }
        let absorbs_left = || m.iter().all(|a| r.elements().all(|x| m.contains(r.mul(x, a))));
        let absorbs_right = || m.iter().all(|a| r.elements().all(|x| m.contains(r.mul(a, x))));
        match self.sidedness {
            Sidedness::AdditiveOnly => true,
            Sidedness::Left => absorbs_left(),
            Sidedness::Right => absorbs_right(),
            Sidedness::TwoSided => absorbs_left() && absorbs_right(),
        }
    }
}

/// Closure of `seed` under addition. In a finite additive group this already
/// contains zero and all negatives.
pub fn additive_closure(ring: &FiniteRing, seed: &ElemSet) -> ElemSet {
    let mut out = ElemSet::singleton(ring.order(), 0);
    let mut work: Vec<ElementId> = Vec::new();
    for s in seed.iter() {
        if out.insert(s) {
            work.push(s);
        }
    }
    while let Some(x) = work.pop() {
        let current: Vec<ElementId> = out.to_vec();
        for y in current {
            let s = ring.add(x, y);
            if out.insert(s) {
                work.push(s);
            }
        }
    }
    out
}

/// Least ideal of the requested sidedness containing `x`.
pub fn ideal_generated(ring: &FiniteRing, x: ElementId, sidedness: Sidedness) -> IdealSet<'_> {
    let mut seed = ElemSet::empty(ring.order());
    match sidedness {
        Sidedness::AdditiveOnly => {
            seed.insert(x);
        }
        Sidedness::Left => {
            for r in ring.elements() {
                seed.insert(ring.mul(r, x));
            }
        }
        Sidedness::Right => {
            for s in ring.elements() {
                seed.insert(ring.mul(x, s));
            }
        }
        Sidedness::TwoSided => {
            for r in ring.elements() {
                let rx = ring.mul(r, x);
                for s in ring.elements() {
                    seed.insert(ring.mul(rx, s));
                }
            }
        }
    }
    IdealSet {
        ring,
        members: additive_closure(ring, &seed),
        sidedness,
    }
}

/// Additive closure of the pairwise products of two ideals of the same ring.
pub fn ideal_product<'r>(i: &IdealSet<'r>, j: &IdealSet<'r>) -> Result<IdealSet<'r>, IdealError> {
    if !std::ptr::eq(i.ring, j.ring) {
        return Err(IdealError::RingMismatch);
    }
    if i.sidedness != Sidedness::TwoSided || j.sidedness != Sidedness::TwoSided {
        return Err(IdealError::NotTwoSided(if i.sidedness != Sidedness::TwoSided {
            i.sidedness
        } else {
            j.sidedness
        }));
    }
    let ring = i.ring;
    let mut seed = ElemSet::empty(ring.order());
    for a in i.iter() {
        for b in j.iter() {
            seed.insert(ring.mul(a, b));
        }
    }
    Ok(IdealSet {
        ring,
        members: additive_closure(ring, &seed),
        sidedness: Sidedness::TwoSided,
    })
}

/// `I^t` with `I^1 = I`.
pub fn ideal_power<'r>(i: &IdealSet<'r>, t: usize) -> Result<IdealSet<'r>, IdealError> {
    assert!(t >= 1, "ideal powers start at 1");
    let mut acc = i.clone();
    for _ in 1..t {
        acc = ideal_product(i, &acc)?;
    }
    Ok(acc)
}

/// Least `t >= 1` with `I^t = 0`, or `None` once the powers stabilize above
/// zero (powers of a two-sided ideal are weakly decreasing).
pub fn nilpotency_index(i: &IdealSet<'_>) -> Result<Option<usize>, IdealError> {
    if i.sidedness != Sidedness::TwoSided {
        return Err(IdealError::NotTwoSided(i.sidedness));
    }
    let mut cur = i.clone();
    let mut t = 1;
    loop {
        if cur.is_zero() {
            return Ok(Some(t));
        }
        let next = ideal_product(i, &cur)?;
        if next.members == cur.members {
            return Ok(None);
        }
        cur = next;
        t += 1;
    }
}

/// Prime ideal test for a proper two-sided ideal: for all `a, b` outside
/// `I`, some `a r b` stays outside `I`.
pub fn is_prime_ideal(i: &IdealSet<'_>) -> Result<bool, IdealError> {
    if i.sidedness != Sidedness::TwoSided {
        return Err(IdealError::NotTwoSided(i.sidedness));
    }
    if !i.is_proper() {
        return Err(IdealError::Improper);
    }
    let ring = i.ring;
    for a in ring.elements().filter(|&a| !i.contains(a)) {
        for b in ring.elements().filter(|&b| !i.contains(b)) {
            let all_inside = ring
                .elements()
                .all(|r| i.contains(ring.mul(ring.mul(a, r), b)));
            if all_inside {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Completely prime: `ab` in `I` forces `a` or `b` into `I`.
pub fn is_completely_prime_ideal(i: &IdealSet<'_>) -> Result<bool, IdealError> {
    if i.sidedness != Sidedness::TwoSided {
        return Err(IdealError::NotTwoSided(i.sidedness));
    }
    if !i.is_proper() {
        return Err(IdealError::Improper);
    }
    let ring = i.ring;
    for a in ring.elements() {
        for b in ring.elements() {
            if i.contains(ring.mul(a, b)) && !i.contains(a) && !i.contains(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All two-sided ideals, grown from the principal ideals by pairwise sums.
/// Bounded by the actual number of ideals, not by subset enumeration.
pub fn enumerate_two_sided_ideals(ring: &FiniteRing) -> Vec<IdealSet<'_>> {
    let principals: Vec<ElemSet> = ring
        .elements()
        .map(|x| ideal_generated(ring, x, Sidedness::TwoSided).members)
        .collect();
    enumerate_from(ring, principals, Sidedness::TwoSided)
}

/// All right ideals, grown from the principal right ideals by pairwise sums.
pub fn enumerate_right_ideals(ring: &FiniteRing) -> Vec<IdealSet<'_>> {
    let principals: Vec<ElemSet> = ring
        .elements()
        .map(|x| ideal_generated(ring, x, Sidedness::Right).members)
        .collect();
    enumerate_from(ring, principals, Sidedness::Right)
}

fn enumerate_from(
    ring: &FiniteRing,
    principals: Vec<ElemSet>,
    sidedness: Sidedness,
) -> Vec<IdealSet<'_>> {
    let mut known: Vec<ElemSet> = Vec::new();
    for p in principals {
        if !known.contains(&p) {
            known.push(p);
        }
    }
    let mut frontier: Vec<ElemSet> = known.clone();
    while let Some(i) = frontier.pop() {
        for j in known.clone() {
            let mut seed = i.clone();
            seed.union_with(&j);
            let sum = additive_closure(ring, &seed);
            if !known.contains(&sum) {
                known.push(sum.clone());
                frontier.push(sum);
            }
        }
    }
    let mut sets = known;
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
    sets.into_iter()
        .map(|members| IdealSet {
            ring,
            members,
            sidedness,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{example_3_6_block, matrix_ring, triangular_matrix_ring, zmod};
    use crate::construct::{OrderCap, RingEndomorphism};

    fn z(n: usize) -> FiniteRing {
        zmod(n, OrderCap::default()).unwrap()
    }

    #[test]
    fn principal_ideal_of_two_in_z4() {
        let z4 = z(4);
        let i = ideal_generated(&z4, 2, Sidedness::TwoSided);
        assert_eq!(i.to_vec(), vec![0, 2]);
        assert!(i.verify());
    }

    #[test]
    fn ideal_of_zero_is_zero() {
        let z6 = z(6);
        for s in [
            Sidedness::Left,
            Sidedness::Right,
            Sidedness::TwoSided,
            Sidedness::AdditiveOnly,
        ] {
            assert_eq!(ideal_generated(&z6, 0, s).to_vec(), vec![0]);
        }
    }

    #[test]
    fn matrix_unit_generates_everything() {
        let z2 = z(2);
        let m = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        let e11 = 1;
        let i = ideal_generated(&m, e11, Sidedness::TwoSided);
        assert_eq!(i.len(), 16, "M2(Z2) is simple");
    }

    #[test]
    fn product_and_nilpotency_in_z4() {
        let z4 = z(4);
        let i = ideal_generated(&z4, 2, Sidedness::TwoSided);
        let sq = ideal_product(&i, &i).unwrap();
        assert_eq!(sq.to_vec(), vec![0]);
        assert_eq!(nilpotency_index(&i).unwrap(), Some(2));
        assert_eq!(nilpotency_index(&IdealSet::zero(&z4)).unwrap(), Some(1));
        assert_eq!(nilpotency_index(&IdealSet::full(&z4)).unwrap(), None);
    }

    #[test]
    fn strict_uppers_of_t3_square_to_corner() {
        let z2 = z(2);
        let id = RingEndomorphism::identity(&z2);
        let t3 = triangular_matrix_ring(&z2, &id, 3, OrderCap::default()).unwrap();
        //

        // Entries (little-endian positions): (0,0),(0,1),(0,2),(1,1),(1,2),(2,2).
        // Strictly upper elements: those with zero at slots 0, 3, 5.
        let strict = ElemSet::from_indices(
            t3.order(),
            t3.elements().filter(|&x| {
                let p = [x % 2, (x / 2) % 2, (x / 4) % 2, (x / 8) % 2, (x / 16) % 2, x / 32];
                p[0] == 0 && p[3] == 0 && p[5] == 0
            }),
        );
        let j = IdealSet::new(&t3, strict, Sidedness::TwoSided);
        let sq = ideal_product(&j, &j).unwrap();
        // The square is the (0,2) corner: elements with only slot 2 free.
        let corner: Vec<usize> = vec![0, 4];
        assert_eq!(sq.to_vec(), corner);
        assert_eq!(nilpotency_index(&j).unwrap(), Some(3));
    }

    #[test]
    fn primality_in_small_commutative_rings() {
        let z4 = z(4);
        let i = ideal_generated(&z4, 2, Sidedness::TwoSided);
        assert!(is_prime_ideal(&i).unwrap());
        assert!(is_completely_prime_ideal(&i).unwrap());

        let z6 = z(6);
        let three = ideal_generated(&z6, 3, Sidedness::TwoSided);
        assert_eq!(three.to_vec(), vec![0, 3]);
        assert!(is_prime_ideal(&three).unwrap());
        assert!(is_completely_prime_ideal(&three).unwrap());
    }

    #[test]
    fn zero_ideal_of_m2_is_prime_not_completely_prime() {
        let z2 = z(2);
        let m = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        let zero = IdealSet::zero(&m);
        assert!(is_prime_ideal(&zero).unwrap());
        assert!(!is_completely_prime_ideal(&zero).unwrap());
    }

    #[test]
    fn improper_ideal_rejected() {
        let z4 = z(4);
        assert_eq!(
            is_prime_ideal(&IdealSet::full(&z4)).unwrap_err(),
            IdealError::Improper
        );
    }

    #[test]
    fn ideal_lattice_of_z6() {
        let z6 = z(6);
        let all = enumerate_two_sided_ideals(&z6);
        let sets: Vec<Vec<usize>> = all.iter().map(|i| i.to_vec()).collect();
        assert_eq!(
            sets,
            vec![
                vec![0],
                vec![0, 3],
                vec![0, 2, 4],
                vec![0, 1, 2, 3, 4, 5],
            ]
        );
    }

    #[test]
    fn ideal_generated_is_minimal() {
        // Dropping any non-generator element must break closure.
        let r4 = example_3_6_block(4, OrderCap::default()).unwrap();
        let x = 2; // some strictly-upper generator
        let i = ideal_generated(&r4, x, Sidedness::TwoSided);
        for drop in i.iter().filter(|&d| d != 0 && d != x) {
            let reduced = ElemSet::from_indices(r4.order(), i.iter().filter(|&m| m != drop));
            let trial = IdealSet {
                ring: &r4,
                members: reduced,
                sidedness: Sidedness::TwoSided,
            };
            assert!(
                !trial.verify(),
                "removing {drop} kept the set closed; ideal was not minimal"
            );
        }
    }

    #[test]
    fn additive_closure_contains_negatives() {
        let z5 = z(5);
        let seed = ElemSet::singleton(5, 2);
        let c = additive_closure(&z5, &seed);
        assert_eq!(c.len(), 5, "2 generates all of Z5 additively");
    }
}
