//! Constructors that assemble new validated rings out of smaller ones:
//! modular rings, finite fields, matrix and triangular rings, truncated skew
//! power series, Morita-context rings, trivial extensions, quotients, and
//! generated subrings.
//!
//! All composite element encodings are little-endian mixed radix: the first
//! listed component is the least significant digit, so the all-zero tuple is
//! index 0 and base-ring embeddings occupy a prefix of the index range.

mod basic;
mod derived;
mod field;
mod morita;
mod series;
mod triangular;

pub use basic::{direct_product, matrix_ring, zmod};
pub use derived::{quotient, subring_from_subset, subring_generated, SubringOutcome};
pub use field::{frobenius, galois_field};
pub use morita::{
    example_2_5_context, example_3_9_context, generalized_matrix, generalized_matrix_context,
    morita_ring, trivial_extension, BimoduleSpec, MoritaContextSpec,
};
pub use series::truncated_skew_power_series;
pub use triangular::{example_3_6_block, seven_like_gf4, triangular_matrix_ring};

use crate::ring::{ElementId, FiniteRing};

/// Largest ring order a constructor will produce without an explicit
/// override. Keeps each quadratic/cubic table scan tractable.
pub const DEFAULT_ORDER_CAP: usize = 1024;

/// Upper bound on constructed ring orders, overridable per call site.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderCap(pub usize);

impl Default for OrderCap {
    fn default() -> Self {
        OrderCap(DEFAULT_ORDER_CAP)
    }
}

impl OrderCap {
    /// Checks a requested order (computed in u128 to survive big powers)
    /// against the cap and narrows it to usize.
    pub fn admit(&self, requested: u128) -> Result<usize, ConstructError> {
        if requested == 0 || requested > self.0 as u128 {
            Err(ConstructError::OrderCap {
                requested,
                cap: self.0,
            })
        } else {
            Ok(requested as usize)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("requested order {requested} exceeds cap {cap}")]
    OrderCap { requested: u128, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a monic irreducible polynomial of the requested degree: {0:?}")]
    BadPolynomial(Vec<u64>),
    #[error("map is not a ring endomorphism ({kind} fails at ({a}, {b}))")]
    NotEndomorphism {
        kind: &'static str,
        a: ElementId,
        b: ElementId,
    },
    #[error("element {0} is not central")]
    NotCentral(ElementId),
    #[error("bimodule axiom `{axiom}` violated at witness {witness:?}")]
    BimoduleAxiom {
        axiom: &'static str,
        witness: Vec<usize>,
    },
    #[error("Morita context condition `{condition}` violated at witness {witness:?}")]
    MoritaCondition {
        condition: &'static str,
        witness: Vec<usize>,
    },
    #[error("input is not a finite field of prime characteristic")]
    NotAField,
    #[error("ideal argument is not a two-sided ideal")]
    NotTwoSided,
    #[error("subset is not closed under the ring operations (witness {0:?})")]
    NotClosed(Vec<usize>),
    #[error("block size {0} is outside the supported range 3..=4")]
    BadBlockSize(usize),
    #[error("endomorphism domain order {map_order} does not match ring order {ring_order}")]
    EndomorphismDomain { map_order: usize, ring_order: usize },
}

/// A unital ring endomorphism given as an element map, verified against its
/// source ring at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingEndomorphism {
    map: Vec<ElementId>,
}

impl RingEndomorphism {
    /// Verifies that `map` preserves zero, one, addition and multiplication
    /// over `ring`.
    pub fn new(ring: &FiniteRing, map: Vec<ElementId>) -> Result<Self, ConstructError> {
        let n = ring.order();
        if map.len() != n || map.iter().any(|&v| v >= n) {
            return Err(ConstructError::EndomorphismDomain {
                map_order: map.len(),
                ring_order: n,
            });
        }
        if map[0] != 0 {
            return Err(ConstructError::NotEndomorphism {
                kind: "zero",
                a: 0,
                b: 0,
            });
        }
        if map[ring.one()] != ring.one() {
            return Err(ConstructError::NotEndomorphism {
                kind: "one",
                a: ring.one(),
                b: ring.one(),
            });
        }
        for a in 0..n {
            for b in 0..n {
                if map[ring.add(a, b)] != ring.add(map[a], map[b]) {
                    return Err(ConstructError::NotEndomorphism { kind: "add", a, b });
                }
                if map[ring.mul(a, b)] != ring.mul(map[a], map[b]) {
                    return Err(ConstructError::NotEndomorphism { kind: "mul", a, b });
                }
            }
        }
        Ok(RingEndomorphism { map })
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        RingEndomorphism {
            map: (0..ring.order()).collect(),
        }
    }

    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a]
    }

    pub fn domain_order(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    /// Iterated composition: `self` applied `t` times.
    pub fn power(&self, t: usize) -> RingEndomorphism {
        let n = self.map.len();
        let mut out: Vec<ElementId> = (0..n).collect();
        for _ in 0..t {
            for v in out.iter_mut() {
                *v = self.map[*v];
            }
        }
        RingEndomorphism { map: out }
    }

    /// Consistency guard used by constructors that twist by `self`.
    fn check_domain(&self, ring: &FiniteRing) -> Result<(), ConstructError> {
        if self.map.len() != ring.order() {
            return Err(ConstructError::EndomorphismDomain {
                map_order: self.map.len(),
                ring_order: ring.order(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_against(&self, ring: &FiniteRing) -> Result<(), ConstructError> {
        self.check_domain(ring)?;
        // Cheap re-verification against the ring actually passed in, so a map
        // built for a different ring of the same order cannot slip through.
        RingEndomorphism::new(ring, self.map.clone()).map(|_| ())
    }
}

/// Little-endian mixed-radix encoding of component tuples into element ids.
pub(crate) struct Radix {
    radices: Vec<usize>,
    places: Vec<usize>,
    order: usize,
}

impl Radix {
    pub fn new(radices: Vec<usize>) -> Radix {
        let mut places = Vec::with_capacity(radices.len());
        let mut acc = 1usize;
        for &r in &radices {
            places.push(acc);
            acc *= r;
        }
        Radix {
            radices,
            places,
            order: acc,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn encode(&self, parts: &[usize]) -> usize {
        debug_assert_eq!(parts.len(), self.radices.len());
        parts
            .iter()
            .zip(&self.places)
            .map(|(&p, &place)| p * place)
            .sum()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.radices.len());
        for &r in &self.radices {
            out.push(idx % r);
            idx /= r;
        }
        out
    }

    /// Decodes every index once up front; constructors then work on slices.
    pub fn decode_all(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| self.decode(i)).collect()
    }
}
