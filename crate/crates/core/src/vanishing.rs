//! Decides whether every sequence of ring elements admits exponents making
//! the ordered product `(a_1 - a_1^{n_1}) ... (a_k - a_k^{n_k})` vanish.
//!
//! A safety-game fixpoint over product sets: a state is the set of nonzero
//! products attainable for some prefix (over all exponent choices). An
//! adversary trying to keep all products nonzero forever must avoid states
//! where 0 is attainable; the hypothesis fails exactly when the pruned state
//! graph contains a reachable cycle.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::ring::{ElementId, FiniteRing};
use crate::set::ElemSet;

/// Default bound on distinct explored product sets.
pub const DEFAULT_MAX_STATES: usize = 1 << 16;

/// A lasso witnessing a failing run: playing `stem` and then repeating
/// `cycle` forever keeps every attainable product nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCycle {
    pub stem: Vec<ElementId>,
    pub cycle: Vec<ElementId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum VanishingOutcome {
    /// Every sequence has a vanishing prefix product.
    Holds,
    /// Some periodic sequence keeps all products nonzero.
    Fails { witness: WitnessCycle },
    /// The state budget ran out before the fixpoint closed.
    Inconclusive { states_seen: usize },
}

/// `{a - a^n : 2 <= n <= max_exponent}`. Power values stop changing once a
/// full cycle has been traversed, so iteration ends early.
fn difference_set(r: &FiniteRing, a: ElementId, max_exponent: usize) -> Vec<ElementId> {
    let seq = r.power_seq(a);
    let horizon = (2 * seq.l).saturating_sub(seq.k + 1).max(2);
    let mut out = ElemSet::empty(r.order());
    for n in 2..=max_exponent.min(horizon) {
        out.insert(r.sub(a, seq.eval(n as u64)));
    }
    out.to_vec()
}

/// Runs the game. `max_exponent` defaults (via [`sequence_vanishing`]) to the
/// ring order, which already realizes every power value.
pub fn sequence_vanishing_with(
    r: &FiniteRing,
    max_exponent: usize,
    max_states: usize,
) -> VanishingOutcome {
    assert!(max_exponent >= 2, "exponents start at 2");
    let diffs: Vec<Vec<ElementId>> = r
        .elements()
        .map(|a| difference_set(r, a, max_exponent))
        .collect();

    // Product-set transition; None when 0 becomes attainable (the branch is
    // then a win for the hypothesis and gets pruned).
    let step = |state: &ElemSet, a: ElementId| -> Option<ElemSet> {
        let mut next = ElemSet::empty(r.order());
        for s in state.iter() {
            for &d in &diffs[a] {
                let p = r.mul(s, d);
                if p == 0 {
                    return None;
                }
                next.insert(p);
            }
        }
        Some(next)
    };

    let mut ids: HashMap<ElemSet, usize> = HashMap::new();
    let mut states: Vec<ElemSet> = Vec::new();
    let mut entry_choice: Vec<ElementId> = Vec::new(); // element that first reached the state
    let mut edges: Vec<Vec<(ElementId, usize)>> = Vec::new();
    let mut initials: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();

    let intern = |set: ElemSet,
                      choice: ElementId,
                      ids: &mut HashMap<ElemSet, usize>,
                      states: &mut Vec<ElemSet>,
                      entry_choice: &mut Vec<ElementId>,
                      edges: &mut Vec<Vec<(ElementId, usize)>>,
                      queue: &mut Vec<usize>|
     -> usize {
        if let Some(&id) = ids.get(&set) {
            return id;
        }
        let id = states.len();
        ids.insert(set.clone(), id);
        states.push(set);
        entry_choice.push(choice);
        edges.push(Vec::new());
        queue.push(id);
        id
    };

    for a in r.elements() {
        let mut init = ElemSet::empty(r.order());
        let mut dead = false;
        for &d in &diffs[a] {
            if d == 0 {
                dead = true;
                break;
            }
            init.insert(d);
        }
        if dead {
            continue;
        }
        let id = intern(
            init,
            a,
            &mut ids,
            &mut states,
            &mut entry_choice,
            &mut edges,
            &mut queue,
        );
        if !initials.contains(&id) {
            initials.push(id);
        }
    }

    while let Some(v) = queue.pop() {
        if states.len() > max_states {
            return VanishingOutcome::Inconclusive {
                states_seen: states.len(),
            };
        }
        for a in r.elements() {
            if let Some(next) = step(&states[v], a) {
                let w = intern(
                    next,
                    a,
                    &mut ids,
                    &mut states,
                    &mut entry_choice,
                    &mut edges,
                    &mut queue,
                );
                edges[v].push((a, w));
            }
        }
    }

    // Cycle detection with path reconstruction over the pruned graph.
    let n = states.len();
    let mut color = vec![0u8; n];
    // DFS path as (state, choice used to enter it).
    let mut path: Vec<(usize, ElementId)> = Vec::new();
    for &root in &initials {
        if color[root] != 0 {
            continue;
        }
        // Iterative DFS keeping the gray path explicit.
        let mut stack: Vec<(usize, ElementId, usize)> = vec![(root, entry_choice[root], 0)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, choice, next_edge) = stack[top];
            if next_edge == 0 {
                color[v] = 1;
                path.push((v, choice));
            }
            if next_edge < edges[v].len() {
                stack[top].2 += 1;
                let (a, w) = edges[v][next_edge];
                if color[w] == 1 {
                    // Lasso found: stem reaches w, cycle returns to w via a.
                    let pos = path.iter().position(|&(s, _)| s == w).unwrap();
                    let stem: Vec<ElementId> =
                        path[..=pos].iter().map(|&(_, c)| c).collect();
                    let mut cycle: Vec<ElementId> =
                        path[pos + 1..].iter().map(|&(_, c)| c).collect();
                    cycle.push(a);
                    return VanishingOutcome::Fails {
                        witness: WitnessCycle { stem, cycle },
                    };
                }
                if color[w] == 0 {
                    stack.push((w, a, 0));
                }
            } else {
                color[v] = 2;
                path.pop();
                stack.pop();
            }
        }
    }
    VanishingOutcome::Holds
}

/// The game with default bounds: exponents up to the ring order and at most
/// [`DEFAULT_MAX_STATES`] distinct product sets.
pub fn sequence_vanishing(r: &FiniteRing) -> VanishingOutcome {
    sequence_vanishing_with(r, r.order().max(2), DEFAULT_MAX_STATES)
}

/// Replays a witness lasso: every product along the stem and one full cycle
/// pass must stay nonzero, and the cycle must return to the same product
/// set. Independent of the search that produced the witness.
pub fn verify_witness_cycle(
    r: &FiniteRing,
    witness: &WitnessCycle,
    max_exponent: usize,
) -> bool {
    if witness.stem.is_empty() || witness.cycle.is_empty() {
        return false;
    }
    let apply = |state: Option<ElemSet>, a: ElementId| -> Option<ElemSet> {
        let diffs = difference_set(r, a, max_exponent);
        let mut next = ElemSet::empty(r.order());
        match state {
            None => {
                for &d in &diffs {
                    if d == 0 {
                        return None;
                    }
                    next.insert(d);
                }
            }
            Some(s) => {
                for v in s.iter() {
                    for &d in &diffs {
                        let p = r.mul(v, d);
                        if p == 0 {
                            return None;
                        }
                        next.insert(p);
                    }
                }
            }
        }
        Some(next)
    };
    let mut state: Option<ElemSet> = None;
    for &a in &witness.stem {
        state = match apply(state, a) {
            Some(s) => Some(s),
            None => return false,
        };
    }
    let anchor = state.clone().expect("stem is nonempty");
    for &a in &witness.cycle {
        state = match apply(state, a) {
            Some(s) => Some(s),
            None => return false,
        };
    }
    state.as_ref() == Some(&anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix_ring, zmod, OrderCap};

    fn z(n: usize) -> FiniteRing {
        zmod(n, OrderCap::default()).unwrap()
    }

    #[test]
    fn z4_vanishes() {
        // Every a - a^n lands in {0, 2} and 2 * 2 = 0, so two factors kill
        // any product.
        assert_eq!(sequence_vanishing(&z(4)), VanishingOutcome::Holds);
    }

    #[test]
    fn zero_ring_vanishes() {
        assert_eq!(sequence_vanishing(&z(1)), VanishingOutcome::Holds);
    }

    #[test]
    fn fields_vanish_immediately() {
        // a - a^n hits 0 for every a in a finite field (a^q = a), so no
        // initial state survives.
        assert_eq!(sequence_vanishing(&z(5)), VanishingOutcome::Holds);
        assert_eq!(sequence_vanishing(&z(7)), VanishingOutcome::Holds);
    }

    #[test]
    fn m2_z2_fails_with_verifiable_cycle() {
        let m2 = matrix_ring(&z(2), 2, OrderCap::default()).unwrap();
        match sequence_vanishing(&m2) {
            VanishingOutcome::Fails { witness } => {
                assert!(verify_witness_cycle(&m2, &witness, m2.order()));
            }
            other => panic!("expected failure on M2(Z2), got {other:?}"),
        }
    }

    #[test]
    fn alternating_matrix_units_are_a_valid_witness() {
        // The canonical alternating pattern: e12, then repeat (e21, e12).
        let m2 = matrix_ring(&z(2), 2, OrderCap::default()).unwrap();
        let (e12, e21) = (2, 4);
        let witness = WitnessCycle {
            stem: vec![e12],
            cycle: vec![e21, e12],
        };
        assert!(verify_witness_cycle(&m2, &witness, m2.order()));
    }

    #[test]
    fn bogus_witness_rejected() {
        let m2 = matrix_ring(&z(2), 2, OrderCap::default()).unwrap();
        let one = m2.one();
        // 1 - 1^n = 0: the very first move dies.
        let witness = WitnessCycle {
            stem: vec![one],
            cycle: vec![one],
        };
        assert!(!verify_witness_cycle(&m2, &witness, m2.order()));
        // A cycle that does not return to its anchor state is also rejected.
        let (e12, e21) = (2, 4);
        let broken = WitnessCycle {
            stem: vec![e12],
            cycle: vec![e21],
        };
        assert!(!verify_witness_cycle(&m2, &broken, m2.order()));
    }

    #[test]
    fn tiny_state_budget_reports_inconclusive() {
        let m2 = matrix_ring(&z(2), 2, OrderCap::default()).unwrap();
        match sequence_vanishing_with(&m2, m2.order(), 1) {
            VanishingOutcome::Inconclusive { states_seen } => assert!(states_seen > 1),
            other => panic!("expected inconclusive under a 1-state budget, got {other:?}"),
        }
    }
}
