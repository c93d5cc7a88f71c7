//! Membership predicates for every ring class the workbench knows, each
//! returning either per-element witnesses or a re-verifiable counterexample
//! certificate, plus the aggregate classification report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::construct::quotient;
use crate::ideals::IdealSet;
use crate::radicals::{
    jacobson_radical, maximal_one_sided_ideals_oracle, nil_elements, prime_radical, Side,
    ORACLE_ORDER_CAP,
};
use crate::ring::{ElementId, EuwDecomposition, FiniteRing, PeriodicityWitness};
use crate::set::ElemSet;

/// The fixed key set of every classification report.
pub const CLASS_NAMES: &[&str] = &[
    "periodic",
    "potent",
    "weakly-periodic",
    "strongly-periodic",
    "strongly-periodic-commuting",
    "2-primal",
    "nil-semicommutative",
    "abelian",
    "right-quasi-duo",
    "left-quasi-duo",
    "J-clean",
    "J-clean-like",
    "potent-lifting",
    "generalized-2-like",
    "generalized-3-like",
    "generalized-5-like",
    "generalized-7-like",
];

/// Which radical a complement search was run against.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalKind {
    Nil,
    Prime,
    Jacobson,
}

/// A counterexample whose violated equation can be re-evaluated on the named
/// elements alone (plus the ring).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    NonPotentElement { a: ElementId },
    NoPotentComplement { a: ElementId, modulo: RadicalKind, commuting: bool },
    NoIdempotentComplement { a: ElementId },
    NilpotentOutsidePrimeRadical { a: ElementId },
    NilSemicommutativeViolation { a: ElementId, x: ElementId, b: ElementId },
    NoncentralIdempotent { e: ElementId, r: ElementId },
    GeneralizedNLikeViolation { a: ElementId, b: ElementId, n: usize },
    StuckJPotent { p: ElementId },
    NonTwoSidedMaximalIdeal { members: Vec<ElementId>, side: Side },
    NoncommutativeModuloJacobson { a: ElementId, b: ElementId },
    MissingEuwDecomposition { a: ElementId },
}

impl Certificate {
    /// Renders the violated equation with concrete element indices.
    pub fn describe(&self, r: &FiniteRing) -> String {
        match self {
            Certificate::NonPotentElement { a } => {
                format!("no m >= 2 has {a}^m = {a}")
            }
            Certificate::NoPotentComplement { a, modulo, commuting } => format!(
                "no potent p has {a} - p in {:?}(R){}",
                modulo,
                if *commuting { " with a*p = p*a" } else { "" }
            ),
            Certificate::NoIdempotentComplement { a } => {
                format!("no idempotent e has {a} - e in J(R)")
            }
            Certificate::NilpotentOutsidePrimeRadical { a } => {
                format!("{a} is nilpotent yet outside P(R)")
            }
            Certificate::NilSemicommutativeViolation { a, x, b } => format!(
                "{a}*{b} = 0 but {a}*{x}*{b} = {} != 0",
                r.mul(r.mul(*a, *x), *b)
            ),
            Certificate::NoncentralIdempotent { e, r: other } => format!(
                "idempotent {e}: {e}*{other} = {} but {other}*{e} = {}",
                r.mul(*e, *other),
                r.mul(*other, *e)
            ),
            Certificate::GeneralizedNLikeViolation { a, b, n } => format!(
                "({a}*{b})^{n} - {a}*{b}^{n} - {a}^{n}*{b} + {a}*{b} = {} != 0",
                gen_n_like_lhs(r, *a, *b, *n)
            ),
            Certificate::StuckJPotent { p } => {
                format!("{p} is potent modulo J(R) but no potent q has {p} - q in J(R)")
            }
            Certificate::NonTwoSidedMaximalIdeal { members, side } => format!(
                "maximal {side:?} ideal {members:?} is not two-sided"
            ),
            Certificate::NoncommutativeModuloJacobson { a, b } => format!(
                "{a}*{b} - {b}*{a} = {} lies outside J(R)",
                r.sub(r.mul(*a, *b), r.mul(*b, *a))
            ),
            Certificate::MissingEuwDecomposition { a } => format!(
                "no (e, u, w) with {a} = e*u + w, e idempotent, u torsion, w in P(R), all commuting"
            ),
        }
    }
}

/// Precomputed per-ring data shared by the predicates, so a full report
/// computes each radical once.
pub struct RingAnalysis<'r> {
    pub ring: &'r FiniteRing,
    pub nil: ElemSet,
    pub prime: IdealSet<'r>,
    pub jacobson: IdealSet<'r>,
    pub potent: ElemSet,
    pub idempotents: ElemSet,
    pub units: ElemSet,
}

impl<'r> RingAnalysis<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        let potent = ElemSet::from_indices(
            ring.order(),
            ring.elements().filter(|&a| ring.potency_exponent(a).is_some()),
        );
        RingAnalysis {
            nil: nil_elements(ring),
            prime: prime_radical(ring),
            jacobson: jacobson_radical(ring),
            potent,
            idempotents: ring.idempotents(),
            units: ring.units(),
            ring,
        }
    }
}

/// A verdict backed by one witness per element.
#[derive(Clone, Debug, Serialize)]
pub struct PerElement<W> {
    pub holds: bool,
    pub witnesses: Vec<W>,
    pub certificate: Option<Certificate>,
}

/// A verdict backed by a single counterexample when it fails.
#[derive(Clone, Debug, Serialize)]
pub struct SetVerdict {
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PotencyWitness {
    pub a: ElementId,
    pub exponent: usize,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComplementWitness {
    pub a: ElementId,
    pub p: ElementId,
}

/// Every finite ring is periodic; the witnesses are the per-element power
/// cycles, re-verifiable through `pow`.
pub fn is_periodic(r: &FiniteRing) -> PerElement<PeriodicityWitness> {
    let witnesses = r.elements().map(|a| r.power_cycle(a)).collect();
    PerElement {
        holds: true,
        witnesses,
        certificate: None,
    }
}

pub fn is_potent_ring(az: &RingAnalysis) -> PerElement<PotencyWitness> {
    let r = az.ring;
    let mut witnesses = Vec::with_capacity(r.order());
    for a in r.elements() {
        match r.potency_exponent(a) {
            Some(m) => witnesses.push(PotencyWitness { a, exponent: m }),
            None => {
                return PerElement {
                    holds: false,
                    witnesses: Vec::new(),
                    certificate: Some(Certificate::NonPotentElement { a }),
                }
            }
        }
    }
    PerElement {
        holds: true,
        witnesses,
        certificate: None,
    }
}

/// Searches, for each element, the lexicographically least potent `p` with
/// `a - p` in the chosen radical set (optionally commuting with `a`).
fn potent_complement_search(
    az: &RingAnalysis,
    target: &ElemSet,
    modulo: RadicalKind,
    commuting: bool,
) -> PerElement<ComplementWitness> {
    let r = az.ring;
    let mut witnesses = Vec::with_capacity(r.order());
    for a in r.elements() {
        let found = az.potent.iter().find(|&p| {
            target.contains(r.sub(a, p)) && (!commuting || r.mul(a, p) == r.mul(p, a))
        });
        match found {
            Some(p) => witnesses.push(ComplementWitness { a, p }),
            None => {
                return PerElement {
                    holds: false,
                    witnesses: Vec::new(),
                    certificate: Some(Certificate::NoPotentComplement { a, modulo, commuting }),
                }
            }
        }
    }
    PerElement {
        holds: true,
        witnesses,
        certificate: None,
    }
}

pub fn is_weakly_periodic(az: &RingAnalysis) -> PerElement<ComplementWitness> {
    potent_complement_search(az, &az.nil, RadicalKind::Nil, false)
}

pub fn is_strongly_periodic(
    az: &RingAnalysis,
    require_commuting: bool,
) -> PerElement<ComplementWitness> {
    potent_complement_search(
        az,
        az.prime.members(),
        RadicalKind::Prime,
        require_commuting,
    )
}

pub fn is_j_clean_like(az: &RingAnalysis) -> PerElement<ComplementWitness> {
    potent_complement_search(az, az.jacobson.members(), RadicalKind::Jacobson, false)
}

pub fn is_j_clean(az: &RingAnalysis) -> PerElement<ComplementWitness> {
    let r = az.ring;
    let mut witnesses = Vec::with_capacity(r.order());
    for a in r.elements() {
        let found = az
            .idempotents
            .iter()
            .find(|&e| az.jacobson.contains(r.sub(a, e)));
        match found {
            Some(e) => witnesses.push(ComplementWitness { a, p: e }),
            None => {
                return PerElement {
                    holds: false,
                    witnesses: Vec::new(),
                    certificate: Some(Certificate::NoIdempotentComplement { a }),
                }
            }
        }
    }
    PerElement {
        holds: true,
        witnesses,
        certificate: None,
    }
}

pub fn is_2_primal(az: &RingAnalysis) -> SetVerdict {
    let outside = az.nil.iter().find(|&a| !az.prime.contains(a));
    match outside {
        // P(R) is nil, so P = N reduces to N being inside P.
        Some(a) => SetVerdict {
            holds: false,
            certificate: Some(Certificate::NilpotentOutsidePrimeRadical { a }),
        },
        None => SetVerdict {
            holds: true,
            certificate: None,
        },
    }
}

pub fn is_nil_semicommutative(az: &RingAnalysis) -> SetVerdict {
    let r = az.ring;
    for a in az.nil.iter() {
        for b in az.nil.iter() {
            if r.mul(a, b) != 0 {
                continue;
            }
            for x in r.elements() {
                if r.mul(r.mul(a, x), b) != 0 {
                    return SetVerdict {
                        holds: false,
                        certificate: Some(Certificate::NilSemicommutativeViolation { a, x, b }),
                    };
                }
            }
        }
    }
    SetVerdict {
        holds: true,
        certificate: None,
    }
}

pub fn is_abelian_ring(az: &RingAnalysis) -> SetVerdict {
    let r = az.ring;
    for e in az.idempotents.iter() {
        for x in r.elements() {
            if r.mul(e, x) != r.mul(x, e) {
                return SetVerdict {
                    holds: false,
                    certificate: Some(Certificate::NoncentralIdempotent { e, r: x }),
                };
            }
        }
    }
    SetVerdict {
        holds: true,
        certificate: None,
    }
}

fn gen_n_like_lhs(r: &FiniteRing, a: ElementId, b: ElementId, n: usize) -> ElementId {
    let ab = r.mul(a, b);
    let t1 = r.pow(ab, n);
    let t2 = r.mul(a, r.pow(b, n));
    let t3 = r.mul(r.pow(a, n), b);
    r.add(r.sub(r.sub(t1, t2), t3), ab)
}

/// The identity `(ab)^n - ab^n - a^n b + ab = 0` over all pairs.
pub fn is_generalized_n_like(r: &FiniteRing, n: usize) -> SetVerdict {
    assert!(n >= 2);
    for a in r.elements() {
        for b in r.elements() {
            if gen_n_like_lhs(r, a, b, n) != 0 {
                return SetVerdict {
                    holds: false,
                    certificate: Some(Certificate::GeneralizedNLikeViolation { a, b, n }),
                };
            }
        }
    }
    SetVerdict {
        holds: true,
        certificate: None,
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct LiftWitness {
    pub p: ElementId,
    pub q: ElementId,
}

/// Every element that is potent modulo J must lift to a genuinely potent
/// element congruent to it mod J.
pub fn potent_lifts_mod_j(az: &RingAnalysis) -> PerElement<LiftWitness> {
    let r = az.ring;
    let (q_ring, proj) = quotient(r, &az.jacobson).expect("J(R) is two-sided");
    let mut witnesses = Vec::new();
    for p in r.elements() {
        if q_ring.potency_exponent(proj[p]).is_none() {
            continue; // not J-potent; nothing to lift
        }
        let found = az.potent.iter().find(|&q| az.jacobson.contains(r.sub(p, q)));
        match found {
            Some(q) => witnesses.push(LiftWitness { p, q }),
            None => {
                return PerElement {
                    holds: false,
                    witnesses: Vec::new(),
                    certificate: Some(Certificate::StuckJPotent { p }),
                }
            }
        }
    }
    PerElement {
        holds: true,
        witnesses,
        certificate: None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiDuoVerdict {
    pub holds: bool,
    /// True when the exhaustive maximal-ideal oracle ran (order within cap).
    pub oracle_checked: bool,
    pub certificate: Option<Certificate>,
}

/// Finite-ring fast path: quasi-duo iff R/J(R) is commutative (the
/// semisimple quotient is a product of matrix rings over finite fields, and
/// all blocks are 1x1 exactly when the quotient commutes). Under the oracle
/// cap the maximal one-sided ideals are enumerated and must agree.
pub fn is_quasi_duo(az: &RingAnalysis, side: Side) -> QuasiDuoVerdict {
    let r = az.ring;
    let (q_ring, proj) = quotient(r, &az.jacobson).expect("J(R) is two-sided");
    let fast = q_ring.is_commutative();
    let mut certificate = None;
    let mut oracle_checked = false;
    if r.order() <= ORACLE_ORDER_CAP {
        let maxes =
            maximal_one_sided_ideals_oracle(r, side).expect("order is within the oracle cap");
        let mut oracle_holds = true;
        for members in &maxes {
            let set = ElemSet::from_indices(r.order(), members.iter().copied());
            let two_sided = members.iter().all(|&a| {
                r.elements()
                    .all(|x| set.contains(r.mul(x, a)) && set.contains(r.mul(a, x)))
            });
            if !two_sided {
                oracle_holds = false;
                certificate = Some(Certificate::NonTwoSidedMaximalIdeal {
                    members: members.clone(),
                    side,
                });
                break;
            }
        }
        assert_eq!(
            fast, oracle_holds,
            "commutative-quotient fast path disagrees with the maximal-ideal oracle"
        );
        oracle_checked = true;
    }
    if !fast && certificate.is_none() {
        // Lift a noncommuting pair of cosets to parent representatives.
        'outer: for x in q_ring.elements() {
            for y in q_ring.elements() {
                if q_ring.mul(x, y) != q_ring.mul(y, x) {
                    let a = proj.iter().position(|&c| c == x).unwrap();
                    let b = proj.iter().position(|&c| c == y).unwrap();
                    certificate = Some(Certificate::NoncommutativeModuloJacobson { a, b });
                    break 'outer;
                }
            }
        }
    }
    QuasiDuoVerdict {
        holds: fast,
        oracle_checked,
        certificate,
    }
}

/// Brute-force search for `a = e*u + w` with `e` idempotent, `u` a torsion
/// unit, `w` in P(R), all pairwise commuting; lexicographically least
/// `(e, u)` wins. Absence is a legitimate outcome.
pub fn euw_decomposition(az: &RingAnalysis, a: ElementId) -> Option<EuwDecomposition> {
    let r = az.ring;
    for e in az.idempotents.iter() {
        for u in az.units.iter() {
            let eu = r.mul(e, u);
            let w = r.sub(a, eu);
            if !az.prime.contains(w) {
                continue;
            }
            let commuting = r.mul(e, u) == r.mul(u, e)
                && r.mul(e, w) == r.mul(w, e)
                && r.mul(u, w) == r.mul(w, u);
            if !commuting {
                continue;
            }
            let torsion_exponent = r
                .multiplicative_order(u)
                .expect("units of a finite ring are torsion");
            return Some(EuwDecomposition {
                element: a,
                e,
                u,
                torsion_exponent,
                w,
            });
        }
    }
    None
}

/// The decomposition above for every element at once.
pub fn euw_all(az: &RingAnalysis) -> PerElement<EuwDecomposition> {
    let mut witnesses = Vec::with_capacity(az.ring.order());
    for a in az.ring.elements() {
        match euw_decomposition(az, a) {
            Some(d) => witnesses.push(d),
            None => {
                return PerElement {
                    holds: false,
                    witnesses: Vec::new(),
                    certificate: Some(Certificate::MissingEuwDecomposition { a }),
                }
            }
        }
    }
    PerElement {
        holds: true,
        witnesses,
        certificate: None,
    }
}

/// Re-evaluates a certificate against the ring it was issued for.
pub fn verify_certificate(r: &FiniteRing, cert: &Certificate) -> bool {
    match cert {
        Certificate::NonPotentElement { a } => r.potency_exponent(*a).is_none(),
        Certificate::NoPotentComplement { a, modulo, commuting } => {
            let az = RingAnalysis::new(r);
            let target = match modulo {
                RadicalKind::Nil => az.nil.clone(),
                RadicalKind::Prime => az.prime.members().clone(),
                RadicalKind::Jacobson => az.jacobson.members().clone(),
            };
            let complement_exists = az.potent.iter().any(|p| {
                target.contains(r.sub(*a, p)) && (!commuting || r.mul(*a, p) == r.mul(p, *a))
            });
            !complement_exists
        }
        Certificate::NoIdempotentComplement { a } => {
            let j = jacobson_radical(r);
            !r.elements()
                .filter(|&e| r.is_idempotent(e))
                .any(|e| j.contains(r.sub(*a, e)))
        }
        Certificate::NilpotentOutsidePrimeRadical { a } => {
            r.nilpotency_exponent(*a).is_some() && !prime_radical(r).contains(*a)
        }
        Certificate::NilSemicommutativeViolation { a, x, b } => {
            r.nilpotency_exponent(*a).is_some()
                && r.nilpotency_exponent(*b).is_some()
                && r.mul(*a, *b) == 0
                && r.mul(r.mul(*a, *x), *b) != 0
        }
        Certificate::NoncentralIdempotent { e, r: x } => {
            r.is_idempotent(*e) && r.mul(*e, *x) != r.mul(*x, *e)
        }
        Certificate::GeneralizedNLikeViolation { a, b, n } => gen_n_like_lhs(r, *a, *b, *n) != 0,
        Certificate::StuckJPotent { p } => {
            let j = jacobson_radical(r);
            let (q_ring, proj) = quotient(r, &j).expect("J is two-sided");
            q_ring.potency_exponent(proj[*p]).is_some()
                && !r
                    .elements()
                    .filter(|&q| r.potency_exponent(q).is_some())
                    .any(|q| j.contains(r.sub(*p, q)))
        }
        Certificate::NonTwoSidedMaximalIdeal { members, side } => {
            let set = ElemSet::from_indices(r.order(), members.iter().copied());
            if !set.contains(0) || set.len() >= r.order() {
                return false;
            }
            let one_side_closed = |left: bool| {
                members.iter().all(|&a| {
                    members.iter().all(|&b| set.contains(r.add(a, b)))
                        && r.elements().all(|x| {
                            set.contains(if left { r.mul(x, a) } else { r.mul(a, x) })
                        })
                })
            };
            let (own, other) = match side {
                Side::Right => (one_side_closed(false), one_side_closed(true)),
                Side::Left => (one_side_closed(true), one_side_closed(false)),
            };
            own && !other
        }
        Certificate::NoncommutativeModuloJacobson { a, b } => {
            let j = jacobson_radical(r);
            !j.contains(r.sub(r.mul(*a, *b), r.mul(*b, *a)))
        }
        Certificate::MissingEuwDecomposition { a } => {
            let az = RingAnalysis::new(r);
            euw_decomposition(&az, *a).is_none()
        }
    }
}

/// One entry of the aggregate report.
#[derive(Clone, Debug, Serialize)]
pub struct ClassVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Verdicts for every class in [`CLASS_NAMES`], plus commutativity as a
/// top-level convenience field.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub ring_hash: String,
    pub order: usize,
    pub commutative: bool,
    pub verdicts: BTreeMap<String, ClassVerdict>,
}

impl ClassificationReport {
    pub fn holds(&self, class: &str) -> bool {
        self.verdicts
            .get(class)
            .unwrap_or_else(|| panic!("unknown class {class}"))
            .holds
    }
}

pub fn classification_report(r: &FiniteRing) -> ClassificationReport {
    let az = RingAnalysis::new(r);
    classification_report_with(&az)
}

/// The report built on an existing analysis, so radicals are not recomputed.
pub fn classification_report_with(az: &RingAnalysis) -> ClassificationReport {
    let r = az.ring;
    let mut verdicts = BTreeMap::new();
    let mut put = |name: &str, holds: bool, certificate: Option<Certificate>, note: Option<String>| {
        verdicts.insert(
            name.to_string(),
            ClassVerdict {
                holds,
                certificate,
                note,
            },
        );
    };

    let periodic = is_periodic(r);
    put("periodic", periodic.holds, None, None);
    let potent = is_potent_ring(az);
    put("potent", potent.holds, potent.certificate, None);
    let weak = is_weakly_periodic(az);
    put("weakly-periodic", weak.holds, weak.certificate, None);
    let strong = is_strongly_periodic(az, false);
    put("strongly-periodic", strong.holds, strong.certificate, None);
    let strong_c = is_strongly_periodic(az, true);
    put(
        "strongly-periodic-commuting",
        strong_c.holds,
        strong_c.certificate,
        None,
    );
    let primal = is_2_primal(az);
    put("2-primal", primal.holds, primal.certificate, None);
    let nsc = is_nil_semicommutative(az);
    put("nil-semicommutative", nsc.holds, nsc.certificate, None);
    let abelian = is_abelian_ring(az);
    put("abelian", abelian.holds, abelian.certificate, None);
    for side in [Side::Right, Side::Left] {
        let qd = is_quasi_duo(az, side);
        let name = match side {
            Side::Right => "right-quasi-duo",
            Side::Left => "left-quasi-duo",
        };
        let note = if qd.oracle_checked {
            Some("fast path confirmed by the maximal-ideal oracle".to_string())
        } else {
            Some("fast path only; order exceeds the oracle cap".to_string())
        };
        put(name, qd.holds, qd.certificate, note);
    }
    let jc = is_j_clean(az);
    put("J-clean", jc.holds, jc.certificate, None);
    let jcl = is_j_clean_like(az);
    put("J-clean-like", jcl.holds, jcl.certificate, None);
    let lifting = potent_lifts_mod_j(az);
    put("potent-lifting", lifting.holds, lifting.certificate, None);
    for n in [2usize, 3, 5, 7] {
        let v = is_generalized_n_like(r, n);
        put(&format!("generalized-{n}-like"), v.holds, v.certificate, None);
    }

    ClassificationReport {
        ring_hash: r.content_hash(),
        order: r.order(),
        commutative: r.is_commutative(),
        verdicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        example_3_6_block, galois_field, matrix_ring, seven_like_gf4, triangular_matrix_ring,
        zmod, OrderCap, RingEndomorphism,
    };

    fn z(n: usize) -> FiniteRing {
        zmod(n, OrderCap::default()).unwrap()
    }

    fn t2z3() -> FiniteRing {
        let z3 = z(3);
        let id = RingEndomorphism::identity(&z3);
        triangular_matrix_ring(&z3, &id, 2, OrderCap::default()).unwrap()
    }

    fn m2z2() -> FiniteRing {
        matrix_ring(&z(2), 2, OrderCap::default()).unwrap()
    }

    #[test]
    fn every_small_ring_is_periodic() {
        for n in 1..=9 {
            let r = z(n);
            let v = is_periodic(&r);
            assert!(v.holds);
            for w in &v.witnesses {
                assert_eq!(r.pow(w.element, w.k), r.pow(w.element, w.l));
            }
        }
    }

    #[test]
    fn potent_ring_verdicts() {
        let z6 = z(6);
        assert!(is_potent_ring(&RingAnalysis::new(&z6)).holds);
        let gf4 = galois_field(2, 2, None, OrderCap::default()).unwrap();
        assert!(is_potent_ring(&RingAnalysis::new(&gf4)).holds);
        let z4 = z(4);
        let v = is_potent_ring(&RingAnalysis::new(&z4));
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert, Certificate::NonPotentElement { a: 2 });
        assert!(verify_certificate(&z4, &cert));
    }

    #[test]
    fn weakly_periodic_small_rings() {
        for r in [z(4), m2z2()] {
            let az = RingAnalysis::new(&r);
            let v = is_weakly_periodic(&az);
            assert!(v.holds, "order {}", r.order());
            for w in &v.witnesses {
                assert!(az.potent.contains(w.p));
                assert!(az.nil.contains(r.sub(w.a, w.p)));
            }
        }
    }

    #[test]
    fn strongly_periodic_z4_but_not_m2() {
        let z4 = z(4);
        assert!(is_strongly_periodic(&RingAnalysis::new(&z4), false).holds);
        let m2 = m2z2();
        let v = is_strongly_periodic(&RingAnalysis::new(&m2), false);
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        // e12 (index 2) is the least element with no potent complement in P.
        assert!(matches!(
            cert,
            Certificate::NoPotentComplement { a: 2, modulo: RadicalKind::Prime, .. }
        ));
        assert!(verify_certificate(&m2, &cert));
    }

    #[test]
    fn two_primal_verdicts() {
        assert!(is_2_primal(&RingAnalysis::new(&z(8))).holds);
        let r4 = example_3_6_block(4, OrderCap::default()).unwrap();
        assert!(is_2_primal(&RingAnalysis::new(&r4)).holds);
        let m2 = m2z2();
        let v = is_2_primal(&RingAnalysis::new(&m2));
        assert!(!v.holds);
        assert_eq!(
            v.certificate,
            Some(Certificate::NilpotentOutsidePrimeRadical { a: 2 })
        );
    }

    #[test]
    fn commutative_rings_are_nil_semicommutative() {
        for n in 2..=9 {
            let r = z(n);
            assert!(is_nil_semicommutative(&RingAnalysis::new(&r)).holds, "Z{n}");
        }
        assert!(is_nil_semicommutative(&RingAnalysis::new(&t2z3())).holds);
    }

    #[test]
    fn block_r4_is_not_nil_semicommutative() {
        let r4 = example_3_6_block(4, OrderCap::default()).unwrap();
        let v = is_nil_semicommutative(&RingAnalysis::new(&r4));
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert!(verify_certificate(&r4, &cert));
    }

    #[test]
    fn abelian_verdicts() {
        let g7 = seven_like_gf4(OrderCap::default()).unwrap();
        assert!(is_abelian_ring(&RingAnalysis::new(&g7)).holds);
        assert!(!g7.is_commutative());
        let m2 = m2z2();
        let v = is_abelian_ring(&RingAnalysis::new(&m2));
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert, Certificate::NoncentralIdempotent { e: 1, r: 2 });
        assert!(verify_certificate(&m2, &cert));
    }

    #[test]
    fn j_clean_like_fixtures() {
        let t = t2z3();
        let az = RingAnalysis::new(&t);
        assert!(is_j_clean_like(&az).holds);
        assert!(!is_j_clean(&az).holds);

        let z4 = z(4);
        let az4 = RingAnalysis::new(&z4);
        assert!(is_j_clean_like(&az4).holds);
        assert!(is_j_clean(&az4).holds);

        let m2 = m2z2();
        let vm = is_j_clean_like(&RingAnalysis::new(&m2));
        assert!(!vm.holds);
        assert!(verify_certificate(&m2, &vm.certificate.unwrap()));
    }

    #[test]
    fn z2_is_j_clean() {
        let z2 = z(2);
        assert!(is_j_clean(&RingAnalysis::new(&z2)).holds);
    }

    #[test]
    fn potent_lifting_fixtures() {
        for r in [z(4), t2z3(), m2z2()] {
            let az = RingAnalysis::new(&r);
            let v = potent_lifts_mod_j(&az);
            assert!(v.holds, "order {}", r.order());
            for w in &v.witnesses {
                assert!(az.potent.contains(w.q));
                assert!(az.jacobson.contains(r.sub(w.p, w.q)));
            }
        }
    }

    #[test]
    fn quasi_duo_fixtures() {
        let t = t2z3();
        let az = RingAnalysis::new(&t);
        let v = is_quasi_duo(&az, Side::Right);
        assert!(v.holds);
        assert!(v.oracle_checked);
        assert!(is_quasi_duo(&az, Side::Left).holds);

        let m2 = m2z2();
        let azm = RingAnalysis::new(&m2);
        let vm = is_quasi_duo(&azm, Side::Right);
        assert!(!vm.holds);
        let cert = vm.certificate.unwrap();
        assert!(matches!(cert, Certificate::NonTwoSidedMaximalIdeal { .. }));
        assert!(verify_certificate(&m2, &cert));
    }

    #[test]
    fn generalized_n_like_fixtures() {
        let g7 = seven_like_gf4(OrderCap::default()).unwrap();
        assert!(is_generalized_n_like(&g7, 7).holds);
        let z2 = z(2);
        assert!(is_generalized_n_like(&z2, 2).holds);
        let z4 = z(4);
        let v = is_generalized_n_like(&z4, 2);
        assert!(!v.holds);
        assert!(verify_certificate(&z4, &v.certificate.unwrap()));
    }

    #[test]
    fn euw_in_z4() {
        let z4 = z(4);
        let az = RingAnalysis::new(&z4);
        let d = euw_decomposition(&az, 0).unwrap();
        assert_eq!((d.e, d.u, d.w), (0, 1, 0));
        let d2 = euw_decomposition(&az, 2).unwrap();
        assert_eq!((d2.e, d2.u, d2.w), (0, 1, 2));
        // Reassembly and side conditions for every element.
        for a in z4.elements() {
            let d = euw_decomposition(&az, a).unwrap();
            assert_eq!(z4.add(z4.mul(d.e, d.u), d.w), a);
            assert!(z4.is_idempotent(d.e));
            assert_eq!(z4.pow(d.u, d.torsion_exponent), z4.one());
            assert!(az.prime.contains(d.w));
        }
    }

    #[test]
    fn euw_missing_in_m2() {
        let m2 = m2z2();
        let az = RingAnalysis::new(&m2);
        // e12 is nilpotent, P(M2) = 0, and e12 is not of the form e*u.
        assert!(euw_decomposition(&az, 2).is_none());
        let v = euw_all(&az);
        assert!(!v.holds);
        assert!(verify_certificate(&m2, &v.certificate.unwrap()));
    }

    #[test]
    fn report_has_every_class_key() {
        let rep = classification_report(&z(4));
        for name in CLASS_NAMES {
            assert!(rep.verdicts.contains_key(*name), "missing {name}");
        }
        assert_eq!(rep.verdicts.len(), CLASS_NAMES.len());
        assert!(rep.commutative);
        assert!(rep.holds("J-clean"));
        assert!(!rep.holds("potent"));
    }

    #[test]
    fn report_for_boolean_ring_is_all_true() {
        let rep = classification_report(&z(2));
        for name in CLASS_NAMES {
            assert!(rep.holds(name), "Z2 should satisfy {name}");
        }
    }

    #[test]
    fn report_json_is_schema_stable() {
        let rep = classification_report(&z(6));
        let json = serde_json::to_value(&rep).unwrap();
        let keys: Vec<&str> = json["verdicts"]
            .as_object()
            .unwrap()
            .keys()
            .map(|s| s.as_str())
            .collect();
        let mut expected: Vec<&str> = CLASS_NAMES.to_vec();
        expected.sort_unstable();
        assert_eq!(keys, expected);
    }
}
