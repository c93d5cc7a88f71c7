//! The three radicals and their cross-checking oracles: nilpotent elements,
//! the Jacobson radical via quasi-regularity, and the prime radical both as
//! the largest nilpotent ideal (fast path) and as the intersection of all
//! prime ideals (enumeration oracle for small orders).

use crate::ideals::{
    additive_closure, enumerate_right_ideals, enumerate_two_sided_ideals, ideal_generated,
    is_prime_ideal, nilpotency_index, IdealError, IdealSet, Sidedness,
};
use crate::ring::{ElementId, FiniteRing};
use crate::set::ElemSet;

/// Orders above this make exhaustive ideal-lattice oracles unreasonable.
pub const ORACLE_ORDER_CAP: usize = 32;

/// All nilpotent elements. Power sequences close within `order` steps, so
/// the bound is exact, not heuristic. Not additively closed in general.
pub fn nil_elements(r: &FiniteRing) -> ElemSet {
    ElemSet::from_indices(
        r.order(),
        r.elements().filter(|&a| r.nilpotency_exponent(a).is_some()),
    )
}

/// The Jacobson radical as the set of `x` with `1 + r x s` a unit for all
/// `r, s`. The result is asserted to be a two-sided nilpotent ideal, which
/// it always is for a finite ring.
pub fn jacobson_radical(r: &FiniteRing) -> IdealSet<'_> {
    let units = r.units();
    let quasi_regular = |x: ElementId| {
        r.elements().all(|a| {
            let ax = r.mul(a, x);
            r.elements()
                .all(|b| units.contains(r.add(r.one(), r.mul(ax, b))))
        })
    };
    let members = ElemSet::from_indices(r.order(), r.elements().filter(|&x| quasi_regular(x)));
    let ideal = IdealSet::new(r, members, Sidedness::TwoSided);
    assert!(
        nilpotency_index(&ideal).expect("two-sided by construction").is_some(),
        "Jacobson radical of a finite ring must be nilpotent"
    );
    ideal
}

/// The prime radical, fast path: the largest nilpotent two-sided ideal,
/// obtained as the sum of all nilpotent principal ideals, iterated to a
/// fixpoint. Asserted nilpotent and contained in the Jacobson radical.
pub fn prime_radical(r: &FiniteRing) -> IdealSet<'_> {
    let mut members = ElemSet::singleton(r.order(), 0);
    loop {
        let mut seed = members.clone();
        let mut grew = false;
        for x in r.elements() {
            if seed.contains(x) {
                continue;
            }
            let principal = ideal_generated(r, x, Sidedness::TwoSided);
            if nilpotency_index(&principal).expect("principal ideal is two-sided").is_some() {
                seed.union_with(principal.members());
                grew = true;
            }
        }
        let closed = additive_closure(r, &seed);
        let stable = closed == members;
        members = closed;
        if !grew || stable {
            break;
        }
    }
    let ideal = IdealSet::new(r, members, Sidedness::TwoSided);
    assert!(
        nilpotency_index(&ideal).expect("two-sided by construction").is_some(),
        "sum of nilpotent ideals must stay nilpotent in a finite ring"
    );
    assert!(
        ideal.members().is_subset_of(jacobson_radical(r).members()),
        "prime radical must sit inside the Jacobson radical"
    );
    ideal
}

/// The prime radical by definition: enumerate all two-sided ideals, filter
/// the primes, intersect. Only for orders up to [`ORACLE_ORDER_CAP`].
pub fn prime_radical_oracle(r: &FiniteRing) -> Result<IdealSet<'_>, IdealError> {
    if r.order() > ORACLE_ORDER_CAP {
        return Err(IdealError::OracleCap {
            order: r.order(),
            cap: ORACLE_ORDER_CAP,
        });
    }
    let mut intersection = ElemSet::full(r.order());
    let mut saw_prime = false;
    for ideal in enumerate_two_sided_ideals(r) {
        if !ideal.is_proper() {
            continue;
        }
        if is_prime_ideal(&ideal)? {
            intersection.intersect_with(ideal.members());
            saw_prime = true;
        }
    }
    if !saw_prime {
        // No proper prime ideals (the zero ring): the intersection over the
        // empty family is the whole ring.
        intersection = ElemSet::full(r.order());
    }
    Ok(IdealSet::new(r, intersection, Sidedness::TwoSided))
}

/// All maximal proper right (or left) ideals, from the exhaustive right
/// ideal lattice. The left version runs on the opposite ring. Only for
/// orders up to [`ORACLE_ORDER_CAP`].
pub fn maximal_one_sided_ideals_oracle(
    r: &FiniteRing,
    side: Side,
) -> Result<Vec<Vec<ElementId>>, IdealError> {
    if r.order() > ORACLE_ORDER_CAP {
        return Err(IdealError::OracleCap {
            order: r.order(),
            cap: ORACLE_ORDER_CAP,
        });
    }
    let flipped;
    let base = match side {
        Side::Right => r,
        Side::Left => {
            flipped = r.opposite();
            &flipped
        }
    };
    let all = enumerate_right_ideals(base);
    let proper: Vec<&IdealSet<'_>> = all.iter().filter(|i| i.is_proper()).collect();
    let mut maximal = Vec::new();
    for i in &proper {
        let dominated = proper.iter().any(|j| {
            j.members() != i.members() && i.members().is_subset_of(j.members())
        });
        if !dominated {
            maximal.push(i.to_vec());
        }
    }
    maximal.sort();
    Ok(maximal)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// Whether every `x` in the ideal has a nilpotent `R x R`; on failure the
/// first offending element is reported.
pub struct LocalNilpotency {
    pub holds: bool,
    pub counterexample: Option<ElementId>,
}

pub fn is_locally_nilpotent(i: &IdealSet<'_>) -> LocalNilpotency {
    let r = i.ring();
    for x in i.iter() {
        let principal = ideal_generated(r, x, Sidedness::TwoSided);
        if nilpotency_index(&principal)
            .expect("principal ideal is two-sided")
            .is_none()
        {
            return LocalNilpotency {
                holds: false,
                counterexample: Some(x),
            };
        }
    }
    LocalNilpotency {
        holds: true,
        counterexample: None,
    }
}

/// T-nilpotency of a two-sided ideal of a finite ring. Nil ideals of finite
/// rings are nilpotent, and nilpotent ideals are T-nilpotent on both sides,
/// so the answer reduces to plain nilpotency; for tiny ideals a direct
/// sequence-game search over ordered products double-checks the collapse.
pub fn is_t_nilpotent(i: &IdealSet<'_>, side: Side) -> Result<bool, IdealError> {
    if i.sidedness() != Sidedness::TwoSided {
        return Err(IdealError::NotTwoSided(i.sidedness()));
    }
    let by_nilpotency = nilpotency_index(i)?.is_some();
    if i.len() <= 8 {
        let by_game = t_nilpotent_game(i, side);
        assert_eq!(
            by_nilpotency, by_game,
            "nilpotency shortcut and sequence game disagree"
        );
    }
    Ok(by_nilpotency)
}

/// Direct search: the ideal is left (right) T-nilpotent iff the graph of
/// nonzero partial products `p -> p*a` (`p -> a*p`) for `a` in the ideal has
/// no reachable cycle.
fn t_nilpotent_game(i: &IdealSet<'_>, side: Side) -> bool {
    let r = i.ring();
    let step = |p: ElementId, a: ElementId| match side {
        Side::Left => r.mul(p, a),
        Side::Right => r.mul(a, p),
    };
    // Nodes: nonzero elements reachable as partial products.
    let mut reachable = ElemSet::empty(r.order());
    let mut work: Vec<ElementId> = Vec::new();
    for a in i.iter().filter(|&a| a != 0) {
        if reachable.insert(a) {
            work.push(a);
        }
    }
    while let Some(p) = work.pop() {
        for a in i.iter() {
            let q = step(p, a);
            if q != 0 && reachable.insert(q) {
                work.push(q);
            }
        }
    }
    // Cycle detection over the reachable subgraph.
    let nodes: Vec<ElementId> = reachable.to_vec();
    let index_of = |x: ElementId| nodes.binary_search(&x).unwrap();
    let mut color = vec![0u8; nodes.len()]; // 0 white, 1 gray, 2 black
    fn dfs(
        v: usize,
        nodes: &[ElementId],
        color: &mut [u8],
        i: &IdealSet<'_>,
        step: &dyn Fn(ElementId, ElementId) -> ElementId,
        index_of: &dyn Fn(ElementId) -> usize,
    ) -> bool {
        color[v] = 1;
        for a in i.iter() {
            let q = step(nodes[v], a);
            if q == 0 {
                continue;
            }
            let w = index_of(q);
            if color[w] == 1 {
                return true;
            }
            if color[w] == 0 && dfs(w, nodes, color, i, step, index_of) {
                return true;
            }
        }
        color[v] = 2;
        false
    }
    for v in 0..nodes.len() {
        if color[v] == 0 && dfs(v, &nodes, &mut color, i, &step, &index_of) {
            return false; // cycle: some sequence never dies
        }
    }
    true
}
