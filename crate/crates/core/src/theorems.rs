//! Executable structural checks over catalog rings and Morita contexts.
//! Biconditionals are evaluated as boolean equality of their two sides, so
//! rings falsifying both sides still exercise the claim; unmet hypotheses
//! yield an explicit `Skipped`, never a silent pass.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::CatalogEntry;
use crate::classify::{
    classification_report_with, euw_all, verify_certificate, Certificate, ClassificationReport,
    RingAnalysis,
};
use crate::construct::{
    example_2_5_context, example_3_9_context, generalized_matrix, generalized_matrix_context,
    morita_ring, quotient, subring_generated, triangular_matrix_ring, trivial_extension,
    truncated_skew_power_series, zmod, BimoduleSpec, MoritaContextSpec, OrderCap,
    RingEndomorphism, SubringOutcome,
};
use crate::ideals::{
    enumerate_two_sided_ideals, ideal_power, is_completely_prime_ideal, is_prime_ideal,
    nilpotency_index, IdealSet, Sidedness,
};
use crate::radicals::{is_locally_nilpotent, is_t_nilpotent, Side, ORACLE_ORDER_CAP};
use crate::ring::{ElementId, FiniteRing};
use crate::set::ElemSet;
use crate::vanishing::{sequence_vanishing_with, verify_witness_cycle, VanishingOutcome};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    Skipped,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub check: String,
    /// Human-readable input description: names plus content hashes.
    pub input: String,
    pub verdict: CheckVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub passes: usize,
    pub fails: usize,
    pub skips: usize,
    pub inconclusive: usize,
    pub reports: Vec<VerdictReport>,
}

impl SuiteReport {
    pub fn all_green(&self) -> bool {
        self.fails == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    /// Seed for the random subring sampling.
    pub seed: u64,
    /// State budget for the sequence-vanishing game.
    pub max_states: usize,
    /// Largest ring order the game runs on.
    pub game_order_cap: usize,
    /// Random subrings sampled per strongly periodic ring.
    pub subring_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 2024,
            max_states: 1 << 16,
            game_order_cap: 16,
            subring_samples: 20,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error("unknown check id `{0}`")]
    UnknownId(String),
    #[error("check {id} expects a {expected} input")]
    SchemaMismatch { id: String, expected: &'static str },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputSchema {
    Ring,
    Context,
    RingWithIdeal,
}

pub struct CheckDef {
    pub id: &'static str,
    pub title: &'static str,
    pub schema: InputSchema,
}

/// Every registered check, one per numbered result.
pub const CHECKS: &[CheckDef] = &[
    CheckDef { id: "T1.1", title: "periodicity witnesses, nilpotent difference, and potent splitting agree per element", schema: InputSchema::Ring },
    CheckDef { id: "L2.1", title: "every pair shares an exponent with both differences nilpotent", schema: InputSchema::Ring },
    CheckDef { id: "T2.2", title: "contexts with nilpotent pairing images preserve periodicity, with the certified exponent bound", schema: InputSchema::Context },
    CheckDef { id: "C2.3", title: "scaled 2x2 matrix rings over central nilpotent scales are periodic", schema: InputSchema::Ring },
    CheckDef { id: "C2.4", title: "trivial extensions are periodic exactly when the base is", schema: InputSchema::Ring },
    CheckDef { id: "E2.5", title: "the block trivial-context instance is periodic", schema: InputSchema::Context },
    CheckDef { id: "L2.6", title: "truncated skew series and twisted triangular rings stay periodic", schema: InputSchema::Ring },
    CheckDef { id: "T2.7", title: "scaled matrix rings over truncated series with power scales are periodic", schema: InputSchema::Ring },
    CheckDef { id: "C2.8", title: "the finite-base specialization of the truncated series transfer", schema: InputSchema::Ring },
    CheckDef { id: "T3.1", title: "strong periodicity equals periodic + locally nilpotent nil ideal equals the quotient form", schema: InputSchema::Ring },
    CheckDef { id: "C3.2", title: "the commuting requirement in strong periodicity is redundant", schema: InputSchema::Ring },
    CheckDef { id: "T3.3", title: "strongly periodic iff 2-primal and weakly periodic", schema: InputSchema::Ring },
    CheckDef { id: "C3.4", title: "strongly periodic iff weakly periodic with all primes completely prime", schema: InputSchema::Ring },
    CheckDef { id: "C3.5", title: "nil-semicommutative weakly periodic rings are strongly periodic", schema: InputSchema::Ring },
    CheckDef { id: "E3.6", title: "the constant-diagonal block ring: strongly periodic, not nil-semicommutative, with the explicit triple", schema: InputSchema::Ring },
    CheckDef { id: "T3.7", title: "contexts with nilpotent pairing images preserve strong periodicity", schema: InputSchema::Context },
    CheckDef { id: "C3.8", title: "scaled 2x2 matrix rings over central nilpotent scales preserve strong periodicity", schema: InputSchema::Ring },
    CheckDef { id: "E3.9", title: "the Z4 context ring of order 128 is strongly periodic", schema: InputSchema::Ring },
    CheckDef { id: "T3.10", title: "strong periodicity equals potent quotient, prime-exponent form, and torsion-unit splitting", schema: InputSchema::Ring },
    CheckDef { id: "C3.11", title: "sampled subrings of strongly periodic rings are strongly periodic", schema: InputSchema::Ring },
    CheckDef { id: "L3.13", title: "strong periodicity lifts along quotients by nilpotent ideals", schema: InputSchema::RingWithIdeal },
    CheckDef { id: "T3.14", title: "strong periodicity of R/I agrees across all ideal powers", schema: InputSchema::RingWithIdeal },
    CheckDef { id: "L3.15", title: "abelian periodic rings are strongly periodic", schema: InputSchema::Ring },
    CheckDef { id: "T3.16", title: "generalized n-like rings are strongly periodic", schema: InputSchema::Ring },
    CheckDef { id: "T4.1", title: "contexts with pairing images inside the radicals preserve J-clean-likeness", schema: InputSchema::Context },
    CheckDef { id: "C4.2", title: "scaled 2x2 matrix rings over central radical scales preserve J-clean-likeness", schema: InputSchema::Ring },
    CheckDef { id: "C4.3", title: "the truncated power-series surrogate preserves J-clean-likeness", schema: InputSchema::Ring },
    CheckDef { id: "P4.4", title: "strongly periodic iff J-clean-like with locally nilpotent radical", schema: InputSchema::Ring },
    CheckDef { id: "P4.5", title: "J-clean iff J-clean-like with the radical pinned by units", schema: InputSchema::Ring },
    CheckDef { id: "E4.6", title: "the order-27 triangular ring is J-clean-like but not J-clean", schema: InputSchema::Ring },
    CheckDef { id: "L4.7", title: "J-clean-like iff potent quotient plus potent lifting", schema: InputSchema::Ring },
    CheckDef { id: "T4.8", title: "J-clean-like iff periodic quotient, quasi-duo, and potent lifting", schema: InputSchema::Ring },
    CheckDef { id: "C4.9", title: "strongly periodic iff periodic, quasi-duo, and locally nilpotent radical", schema: InputSchema::Ring },
    CheckDef { id: "L4.11", title: "J-clean-like rings keep nilpotents inside the radical", schema: InputSchema::Ring },
    CheckDef { id: "L4.12", title: "periodic with nilpotents in the radical iff J-clean-like with nil radical", schema: InputSchema::Ring },
    CheckDef { id: "T4.13", title: "when every sequence has a vanishing product, the ring is J-clean-like", schema: InputSchema::Ring },
    CheckDef { id: "C4.14", title: "potent quotient plus T-nilpotent radical forces J-clean-likeness", schema: InputSchema::Ring },
];

pub fn check_def(id: &str) -> Option<&'static CheckDef> {
    CHECKS.iter().find(|c| c.id == id)
}

/// One concrete input for a check.
pub enum CheckInput<'a> {
    Ring {
        name: String,
        ring: &'a FiniteRing,
    },
    Context {
        name: String,
        spec: &'a MoritaContextSpec,
    },
    RingWithIdeal {
        name: String,
        ring: &'a FiniteRing,
        ideal: Vec<ElementId>,
    },
}

impl<'a> CheckInput<'a> {
    fn describe(&self) -> String {
        match self {
            CheckInput::Ring { name, ring } => {
                format!("{name} [{}]", &ring.content_hash()[..12])
            }
            CheckInput::Context { name, spec } => format!(
                "{name} [A {} | B {}]",
                &spec.ring_a.content_hash()[..12],
                &spec.ring_b.content_hash()[..12]
            ),
            CheckInput::RingWithIdeal { name, ring, ideal } => format!(
                "{name} with ideal of size {} [{}]",
                ideal.len(),
                &ring.content_hash()[..12]
            ),
        }
    }
}

/// Per-ring data shared by all ring checks in a suite run.
struct Prepared<'r> {
    az: RingAnalysis<'r>,
    cls: ClassificationReport,
    /// R/J(R) and the projection onto it.
    quotient_j: (FiniteRing, Vec<usize>),
}

impl<'r> Prepared<'r> {
    fn new(ring: &'r FiniteRing) -> Prepared<'r> {
        let az = RingAnalysis::new(ring);
        let cls = classification_report_with(&az);
        let quotient_j = quotient(ring, &az.jacobson).expect("J is two-sided");
        Prepared {
            az,
            cls,
            quotient_j,
        }
    }

    fn ring(&self) -> &'r FiniteRing {
        self.az.ring
    }

    fn holds(&self, class: &str) -> bool {
        self.cls.holds(class)
    }
}

struct Outcome {
    verdict: CheckVerdict,
    detail: Option<String>,
    payload: Option<Value>,
}

impl Outcome {
    fn pass() -> Outcome {
        Outcome {
            verdict: CheckVerdict::Pass,
            detail: None,
            payload: None,
        }
    }
    fn pass_with(detail: impl Into<String>) -> Outcome {
        Outcome {
            verdict: CheckVerdict::Pass,
            detail: Some(detail.into()),
            payload: None,
        }
    }
    fn fail(detail: impl Into<String>, payload: Value) -> Outcome {
        Outcome {
            verdict: CheckVerdict::Fail,
            detail: Some(detail.into()),
            payload: Some(payload),
        }
    }
    fn skipped(reason: impl Into<String>) -> Outcome {
        Outcome {
            verdict: CheckVerdict::Skipped,
            detail: Some(reason.into()),
            payload: None,
        }
    }
}

fn equivalence(sides: &[(&str, bool)]) -> Outcome {
    let first = sides[0].1;
    if sides.iter().all(|&(_, v)| v == first) {
        let rendered: Vec<String> = sides.iter().map(|(n, v)| format!("{n}={v}")).collect();
        Outcome::pass_with(rendered.join(", "))
    } else {
        Outcome::fail(
            "equivalence broken",
            json!(sides
                .iter()
                .map(|(n, v)| json!({ "side": n, "holds": v }))
                .collect::<Vec<_>>()),
        )
    }
}

fn implication(name_lhs: &str, lhs: bool, name_rhs: &str, rhs: bool) -> Outcome {
    if lhs && !rhs {
        Outcome::fail(
            format!("{name_lhs} holds but {name_rhs} fails"),
            json!({ "lhs": name_lhs, "rhs": name_rhs }),
        )
    } else if lhs {
        Outcome::pass_with(format!("{name_lhs} and {name_rhs} both hold"))
    } else {
        Outcome::pass_with(format!("{name_lhs} does not apply here (antecedent false)"))
    }
}

fn is_two_sided_ideal_set(r: &FiniteRing, set: &ElemSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    for a in set.iter() {
        if !set.contains(r.neg(a)) {
            return false;
        }
        for b in set.iter() {
            if !set.contains(r.add(a, b)) {
                return false;
            }
        }
        for x in r.elements() {
            if !set.contains(r.mul(x, a)) || !set.contains(r.mul(a, x)) {
                return false;
            }
        }
    }
    true
}

fn ring_is_potent(r: &FiniteRing) -> bool {
    r.elements().all(|a| r.potency_exponent(a).is_some())
}

fn small_primes_upto(bound: usize) -> impl Iterator<Item = usize> {
    (2..=bound).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

// ---------------------------------------------------------------------------
// Ring checks
// ---------------------------------------------------------------------------

fn check_t11(p: &Prepared) -> Outcome {
    let r = p.ring();
    for a in r.elements() {
        let wit = r.power_cycle(a);
        if r.pow_wide(a, wit.k as u64) != r.pow_wide(a, wit.l as u64) {
            return Outcome::fail("power cycle does not verify", json!({ "element": a }));
        }
        // Nilpotent-difference form with exponent m = n + 1 >= 2.
        let m = wit.n + 1;
        let diff = r.sub(a, r.pow_wide(a, m as u64));
        if r.nilpotency_exponent(diff).is_none() {
            return Outcome::fail(
                "difference a - a^m is not nilpotent",
                json!({ "element": a, "m": m }),
            );
        }
        // Potent-plus-commuting-nilpotent form (asserts internally).
        let d = r.potent_decomposition(a);
        let p_ok = d.p == 0 || r.potency_exponent(d.p).is_some();
        if !p_ok || r.add(d.p, d.w) != a {
            return Outcome::fail("potent splitting does not verify", json!({ "element": a }));
        }
    }
    Outcome::pass()
}

/// The shared pair exponent from the two power cycles; returns `m` with
/// `a - a^m` and `b - b^m` both nilpotent, or the offending pair.
fn pair_exponent(
    ra: &FiniteRing,
    rb: &FiniteRing,
    a: ElementId,
    b: ElementId,
) -> Result<u64, String> {
    let ca = ra.power_cycle(a);
    let cb = rb.power_cycle(b);
    let (p, q) = (ca.k as u64, ca.l as u64);
    let (s, t) = (cb.k as u64, cb.l as u64);
    let k = p * s;
    let l = k + (t - s) * p * (q - p) * s;
    if ra.pow_wide(a, k) != ra.pow_wide(a, l) || rb.pow_wide(b, k) != rb.pow_wide(b, l) {
        return Err(format!("common cycle (k={k}, l={l}) fails on pair ({a}, {b})"));
    }
    let n = k * (l - k);
    Ok(n + 1)
}

fn check_l21(p: &Prepared) -> Outcome {
    let r = p.ring();
    for a in r.elements() {
        for b in r.elements() {
            let m = match pair_exponent(r, r, a, b) {
                Ok(m) => m,
                Err(e) => return Outcome::fail(e, json!({ "a": a, "b": b })),
            };
            let da = r.sub(a, r.pow_wide(a, m));
            let db = r.sub(b, r.pow_wide(b, m));
            if !p.az.nil.contains(da) || !p.az.nil.contains(db) {
                return Outcome::fail(
                    "shared exponent does not make both differences nilpotent",
                    json!({ "a": a, "b": b, "m": m }),
                );
            }
        }
    }
    Outcome::pass()
}

fn central_scales(az: &RingAnalysis, radical: &ElemSet) -> Vec<ElementId> {
    let center = az.ring.center();
    az.ring
        .elements()
        .filter(|&s| center.contains(s) && radical.contains(s))
        .collect()
}

fn check_c23(p: &Prepared) -> Outcome {
    let r = p.ring();
    if (r.order() as u128).pow(4) > OrderCap::default().0 as u128 {
        return Outcome::skipped("scaled matrix ring would exceed the order cap");
    }
    let scales = central_scales(&p.az, &p.az.nil);
    let mut tested = Vec::new();
    for s in scales {
        let m = generalized_matrix(r, s, OrderCap::default()).expect("cap checked above");
        let periodic = crate::classify::is_periodic(&m).holds;
        if !periodic {
            return Outcome::fail("scaled matrix ring not periodic", json!({ "scale": s }));
        }
        tested.push(s);
    }
    Outcome::pass_with(format!("scales tested: {tested:?}"))
}

fn check_c24(p: &Prepared) -> Outcome {
    let r = p.ring();
    if (r.order() as u128).pow(2) > OrderCap::default().0 as u128 {
        return Outcome::skipped("trivial extension would exceed the order cap");
    }
    let t = trivial_extension(r, &BimoduleSpec::regular(r), OrderCap::default())
        .expect("cap checked above");
    let lhs = crate::classify::is_periodic(r).holds;
    let rhs = crate::classify::is_periodic(&t).holds;
    equivalence(&[("base periodic", lhs), ("extension periodic", rhs)])
}

fn check_l26(p: &Prepared) -> Outcome {
    let r = p.ring();
    let cap = OrderCap::default();
    let mut built = Vec::new();
    let mut twists: Vec<(&str, RingEndomorphism)> =
        vec![("id", RingEndomorphism::identity(r))];
    if let Ok(fr) = crate::construct::frobenius(r) {
        if fr.map() != RingEndomorphism::identity(r).map() {
            twists.push(("frobenius", fr));
        }
    }
    for (tag, alpha) in &twists {
        if (r.order() as u128).pow(2) <= cap.0 as u128 {
            let s = truncated_skew_power_series(r, alpha, 2, cap).expect("cap checked");
            if !crate::classify::is_periodic(&s).holds {
                return Outcome::fail("truncated series not periodic", json!({ "twist": tag }));
            }
            built.push(format!("series/{tag}"));
        }
        if (r.order() as u128).pow(3) <= cap.0 as u128 {
            let t = triangular_matrix_ring(r, alpha, 2, cap).expect("cap checked");
            if !crate::classify::is_periodic(&t).holds {
                return Outcome::fail("twisted triangular not periodic", json!({ "twist": tag }));
            }
            built.push(format!("triangular/{tag}"));
        }
    }
    if built.is_empty() {
        return Outcome::skipped("all constructions exceed the order cap");
    }
    Outcome::pass_with(built.join(", "))
}

fn check_t27(p: &Prepared) -> Outcome {
    let r = p.ring();
    let cap = OrderCap::default();
    let id = RingEndomorphism::identity(r);
    let mut tested = Vec::new();
    for n in 1..=2usize {
        let series_order = (r.order() as u128).pow(n as u32);
        if series_order.pow(4) > cap.0 as u128 {
            continue;
        }
        let s = truncated_skew_power_series(r, &id, n, cap).expect("cap checked");
        for m in 1..=n {
            // x^m is the tuple with 1 at degree m; degree n truncates to 0.
            let x_m = if m == n { 0 } else { r.order().pow(m as u32) * r.one() };
            let scaled = generalized_matrix(&s, x_m, cap).expect("cap checked");
            if !crate::classify::is_periodic(&scaled).holds {
                return Outcome::fail(
                    "scaled series matrix ring not periodic",
                    json!({ "n": n, "m": m }),
                );
            }
            tested.push(format!("n={n},m={m}"));
        }
    }
    if tested.is_empty() {
        return Outcome::skipped("every truncation exceeds the order cap");
    }
    Outcome::pass_with(tested.join("; "))
}

fn check_t31(p: &Prepared) -> Outcome {
    let r = p.ring();
    let c1 = p.holds("strongly-periodic");
    let nil_ideal = is_two_sided_ideal_set(r, &p.az.nil);
    let nil_locally_nilpotent = nil_ideal && {
        let ideal = IdealSet::new(r, p.az.nil.clone(), Sidedness::TwoSided);
        is_locally_nilpotent(&ideal).holds
    };
    let c2 = p.holds("periodic") && nil_ideal && nil_locally_nilpotent;
    let c3 = ring_is_potent(&p.quotient_j.0)
        && p.holds("potent-lifting")
        && is_locally_nilpotent(&p.az.jacobson).holds;
    equivalence(&[
        ("strongly periodic", c1),
        ("periodic + locally nilpotent nil ideal", c2),
        ("potent quotient + lifting + locally nilpotent radical", c3),
    ])
}

fn check_c32(p: &Prepared) -> Outcome {
    equivalence(&[
        ("strongly periodic (plain)", p.holds("strongly-periodic")),
        ("strongly periodic (commuting)", p.holds("strongly-periodic-commuting")),
    ])
}

fn check_t33(p: &Prepared) -> Outcome {
    equivalence(&[
        ("strongly periodic", p.holds("strongly-periodic")),
        (
            "2-primal and weakly periodic",
            p.holds("2-primal") && p.holds("weakly-periodic"),
        ),
    ])
}

fn check_c34(p: &Prepared) -> Outcome {
    let r = p.ring();
    if r.order() > ORACLE_ORDER_CAP {
        return Outcome::skipped("prime-ideal enumeration exceeds the oracle cap");
    }
    let mut all_completely_prime = true;
    for ideal in enumerate_two_sided_ideals(r) {
        if !ideal.is_proper() {
            continue;
        }
        if is_prime_ideal(&ideal).expect("proper two-sided")
            && !is_completely_prime_ideal(&ideal).expect("proper two-sided")
        {
            all_completely_prime = false;
            break;
        }
    }
    equivalence(&[
        ("strongly periodic", p.holds("strongly-periodic")),
        (
            "weakly periodic + primes completely prime",
            p.holds("weakly-periodic") && all_completely_prime,
        ),
    ])
}

fn check_c35(p: &Prepared) -> Outcome {
    implication(
        "nil-semicommutative and weakly periodic",
        p.holds("nil-semicommutative") && p.holds("weakly-periodic"),
        "strongly periodic",
        p.holds("strongly-periodic"),
    )
}

fn check_e36(p: &Prepared) -> Outcome {
    let r = p.ring();
    let expected = crate::catalog::Recipe::Block36 { n: 4 }
        .build(OrderCap::default())
        .expect("fixture builds");
    if r.content_hash() != expected.content_hash() {
        return Outcome::skipped("input is not the order-128 block fixture");
    }
    if !p.holds("strongly-periodic") || !p.holds("2-primal") {
        return Outcome::fail("block ring must be strongly periodic and 2-primal", json!({}));
    }
    if p.holds("nil-semicommutative") {
        return Outcome::fail("block ring must not be nil-semicommutative", json!({}));
    }
    // The explicit triple: a = e12 + e13, x = e23, b = e24 + e34 (1-based),
    // in the component encoding (diagonal bit, then strictly upper entries
    // row-major): bits 1,2 / bit 4 / bits 5,6.
    let (a, x, b) = (0b0000110, 0b0010000, 0b1100000);
    let cert = Certificate::NilSemicommutativeViolation { a, x, b };
    if !verify_certificate(r, &cert) {
        return Outcome::fail(
            "the explicit triple fails re-verification",
            json!({ "a": a, "x": x, "b": b }),
        );
    }
    Outcome::pass_with("explicit triple re-verified")
}

fn check_c38(p: &Prepared) -> Outcome {
    let r = p.ring();
    if (r.order() as u128).pow(4) > OrderCap::default().0 as u128 {
        return Outcome::skipped("scaled matrix ring would exceed the order cap");
    }
    if !p.holds("strongly-periodic") {
        return Outcome::skipped("base ring is not strongly periodic");
    }
    let mut tested = Vec::new();
    for s in central_scales(&p.az, &p.az.nil) {
        let m = generalized_matrix(r, s, OrderCap::default()).expect("cap checked");
        let maz = RingAnalysis::new(&m);
        if !crate::classify::is_strongly_periodic(&maz, false).holds {
            return Outcome::fail("scaled matrix ring not strongly periodic", json!({ "scale": s }));
        }
        tested.push(s);
    }
    Outcome::pass_with(format!("scales tested: {tested:?}"))
}

fn check_e39(p: &Prepared) -> Outcome {
    let r = p.ring();
    let expected = morita_ring(&example_3_9_context(), OrderCap::default()).expect("fixture");
    if r.content_hash() != expected.content_hash() {
        return Outcome::skipped("input is not the order-128 context fixture");
    }
    if r.order() != 128 {
        return Outcome::fail("fixture must have order 128", json!({ "order": r.order() }));
    }
    if !p.holds("strongly-periodic") {
        return Outcome::fail("context ring must be strongly periodic", json!({}));
    }
    Outcome::pass()
}

fn check_t310(p: &Prepared) -> Outcome {
    let r = p.ring();
    let c1 = p.holds("strongly-periodic");
    let (q, _) = quotient(r, &p.az.prime).expect("P is two-sided");
    let c2 = ring_is_potent(&q);
    // Prime-exponent form, evaluated in R/P with a generous prime budget.
    let bound = 64 * r.order().max(2);
    let c3 = q.elements().all(|x| {
        small_primes_upto(bound).any(|m| q.pow_wide(x, m as u64) == x)
    });
    let euw = euw_all(&p.az);
    equivalence(&[
        ("strongly periodic", c1),
        ("potent quotient by prime radical", c2),
        ("prime-exponent congruence", c3),
        ("torsion-unit splitting everywhere", euw.holds),
    ])
}

fn check_c311(p: &Prepared, config: &SuiteConfig) -> Outcome {
    let r = p.ring();
    if !p.holds("strongly-periodic") {
        return Outcome::skipped("hypothesis unmet: ring is not strongly periodic");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ hash_prefix(r));
    let mut seen = Vec::new();
    let mut checked = 0usize;
    for _ in 0..config.subring_samples {
        let x = rng.gen_range(0..r.order());
        let y = rng.gen_range(0..r.order());
        let SubringOutcome::Ring { ring: sub, .. } = subring_generated(r, &[x, y], true) else {
            return Outcome::fail("closure with 1 lost its identity", json!({ "x": x, "y": y }));
        };
        if sub.order() == r.order() {
            continue; // the whole ring; already covered at top level
        }
        let h = sub.content_hash();
        if seen.contains(&h) {
            continue;
        }
        seen.push(h);
        let saz = RingAnalysis::new(&sub);
        if !crate::classify::is_strongly_periodic(&saz, false).holds {
            return Outcome::fail(
                "subring is not strongly periodic",
                json!({ "generators": [x, y], "order": sub.order() }),
            );
        }
        checked += 1;
    }
    Outcome::pass_with(format!("{checked} distinct proper subrings checked"))
}

fn hash_prefix(r: &FiniteRing) -> u64 {
    let h = r.content_hash();
    u64::from_str_radix(&h[..16], 16).unwrap_or(0)
}

fn check_l315(p: &Prepared) -> Outcome {
    implication(
        "abelian and periodic",
        p.holds("abelian") && p.holds("periodic"),
        "strongly periodic",
        p.holds("strongly-periodic"),
    )
}

fn check_t316(p: &Prepared) -> Outcome {
    let mut applied = Vec::new();
    for n in [2usize, 3, 5, 7] {
        let like = p.holds(&format!("generalized-{n}-like"));
        if like {
            if !p.holds("strongly-periodic") {
                return Outcome::fail(
                    "generalized n-like ring is not strongly periodic",
                    json!({ "n": n }),
                );
            }
            applied.push(n);
        }
    }
    if applied.is_empty() {
        Outcome::pass_with("no tested n applies (antecedent false)")
    } else {
        Outcome::pass_with(format!("applies for n in {applied:?}"))
    }
}

fn check_c42(p: &Prepared) -> Outcome {
    let r = p.ring();
    if (r.order() as u128).pow(4) > OrderCap::default().0 as u128 {
        return Outcome::skipped("scaled matrix ring would exceed the order cap");
    }
    if !p.holds("J-clean-like") {
        return Outcome::skipped("base ring is not J-clean-like");
    }
    let mut tested = Vec::new();
    for s in central_scales(&p.az, p.az.jacobson.members()) {
        let m = generalized_matrix(r, s, OrderCap::default()).expect("cap checked");
        let maz = RingAnalysis::new(&m);
        if !crate::classify::is_j_clean_like(&maz).holds {
            return Outcome::fail("scaled matrix ring not J-clean-like", json!({ "scale": s }));
        }
        tested.push(s);
    }
    Outcome::pass_with(format!("scales tested: {tested:?}"))
}

fn check_c43(p: &Prepared) -> Outcome {
    let r = p.ring();
    let cap = OrderCap::default();
    if (r.order() as u128).pow(8) > cap.0 as u128 {
        return Outcome::skipped("truncated surrogate would exceed the order cap");
    }
    if !p.holds("J-clean-like") {
        return Outcome::skipped("base ring is not J-clean-like");
    }
    let id = RingEndomorphism::identity(r);
    let s = truncated_skew_power_series(r, &id, 2, cap).expect("cap checked");
    let x = r.order() * r.one();
    let scaled = generalized_matrix(&s, x, cap).expect("cap checked");
    let saz = RingAnalysis::new(&scaled);
    if !crate::classify::is_j_clean_like(&saz).holds {
        return Outcome::fail("truncated surrogate not J-clean-like", json!({}));
    }
    Outcome::pass_with("full power-series statement tested on the degree-2 truncation")
}

fn check_p44(p: &Prepared) -> Outcome {
    equivalence(&[
        ("strongly periodic", p.holds("strongly-periodic")),
        (
            "J-clean-like + locally nilpotent radical",
            p.holds("J-clean-like") && is_locally_nilpotent(&p.az.jacobson).holds,
        ),
    ])
}

fn check_p45(p: &Prepared) -> Outcome {
    let r = p.ring();
    let quasi = ElemSet::from_indices(
        r.order(),
        r.elements().filter(|&x| p.az.units.contains(r.sub(r.one(), x))),
    );
    let j_pinned = *p.az.jacobson.members() == quasi;
    equivalence(&[
        ("J-clean", p.holds("J-clean")),
        (
            "J-clean-like + radical pinned by units",
            p.holds("J-clean-like") && j_pinned,
        ),
    ])
}

fn check_e46(p: &Prepared) -> Outcome {
    let r = p.ring();
    let expected = crate::catalog::Recipe::Triangular {
        base: Box::new(crate::catalog::Recipe::Zmod(3)),
        n: 2,
        twist: crate::catalog::Twist::Identity,
    }
    .build(OrderCap::default())
    .expect("fixture builds");
    if r.content_hash() != expected.content_hash() {
        return Outcome::skipped("input is not the order-27 triangular fixture");
    }
    match (p.holds("J-clean-like"), p.holds("J-clean")) {
        (true, false) => Outcome::pass(),
        (jcl, jc) => Outcome::fail(
            "expected J-clean-like without J-clean",
            json!({ "J-clean-like": jcl, "J-clean": jc }),
        ),
    }
}

fn check_l47(p: &Prepared) -> Outcome {
    equivalence(&[
        ("J-clean-like", p.holds("J-clean-like")),
        (
            "potent quotient + potent lifting",
            ring_is_potent(&p.quotient_j.0) && p.holds("potent-lifting"),
        ),
    ])
}

fn check_t48(p: &Prepared) -> Outcome {
    let quotient_periodic = crate::classify::is_periodic(&p.quotient_j.0).holds;
    let jcl = p.holds("J-clean-like");
    let with_right = quotient_periodic && p.holds("right-quasi-duo") && p.holds("potent-lifting");
    let with_left = quotient_periodic && p.holds("left-quasi-duo") && p.holds("potent-lifting");
    equivalence(&[
        ("J-clean-like", jcl),
        ("periodic quotient + right quasi-duo + lifting", with_right),
        ("periodic quotient + left quasi-duo + lifting", with_left),
    ])
}

fn check_c49(p: &Prepared) -> Outcome {
    let loc = is_locally_nilpotent(&p.az.jacobson).holds;
    equivalence(&[
        ("strongly periodic", p.holds("strongly-periodic")),
        (
            "periodic + right quasi-duo + locally nilpotent radical",
            p.holds("periodic") && p.holds("right-quasi-duo") && loc,
        ),
        (
            "periodic + left quasi-duo + locally nilpotent radical",
            p.holds("periodic") && p.holds("left-quasi-duo") && loc,
        ),
    ])
}

fn check_l411(p: &Prepared) -> Outcome {
    implication(
        "J-clean-like",
        p.holds("J-clean-like"),
        "nilpotents inside the radical",
        p.az.nil.is_subset_of(p.az.jacobson.members()),
    )
}

fn check_l412(p: &Prepared) -> Outcome {
    let r = p.ring();
    let nil_in_j = p.az.nil.is_subset_of(p.az.jacobson.members());
    let j_nil = p
        .az
        .jacobson
        .iter()
        .all(|x| r.nilpotency_exponent(x).is_some());
    equivalence(&[
        ("periodic + nilpotents in radical", p.holds("periodic") && nil_in_j),
        ("J-clean-like + nil radical", p.holds("J-clean-like") && j_nil),
    ])
}

fn check_t413(p: &Prepared, config: &SuiteConfig) -> Outcome {
    let r = p.ring();
    if r.order() > config.game_order_cap {
        return Outcome::skipped("ring order exceeds the game cap");
    }
    match sequence_vanishing_with(r, r.order().max(2), config.max_states) {
        VanishingOutcome::Holds => {
            if p.holds("J-clean-like") {
                Outcome::pass_with("vanishing hypothesis holds and the ring is J-clean-like")
            } else {
                Outcome::fail("vanishing hypothesis holds but the ring is not J-clean-like", json!({}))
            }
        }
        VanishingOutcome::Fails { witness } => {
            if !verify_witness_cycle(r, &witness, r.order().max(2)) {
                return Outcome::fail(
                    "game produced a witness cycle that does not re-verify",
                    json!({ "witness": witness }),
                );
            }
            Outcome {
                verdict: CheckVerdict::Skipped,
                detail: Some("hypothesis fails here; implication tested in the sound direction only".into()),
                payload: Some(json!({ "witness": witness })),
            }
        }
        VanishingOutcome::Inconclusive { states_seen } => Outcome {
            verdict: CheckVerdict::Inconclusive,
            detail: Some(format!("state budget exhausted after {states_seen} states")),
            payload: None,
        },
    }
}

fn check_c414(p: &Prepared) -> Outcome {
    let quotient_potent = ring_is_potent(&p.quotient_j.0);
    let jcl = p.holds("J-clean-like");
    let mut results = Vec::new();
    for side in [Side::Left, Side::Right] {
        let t_nil = is_t_nilpotent(&p.az.jacobson, side).expect("J is two-sided");
        let out = implication(
            "potent quotient + T-nilpotent radical",
            quotient_potent && t_nil,
            "J-clean-like",
            jcl,
        );
        if out.verdict == CheckVerdict::Fail {
            return out;
        }
        results.push(format!("{side:?}: ok"));
    }
    Outcome::pass_with(results.join(", "))
}

// ---------------------------------------------------------------------------
// Context checks
// ---------------------------------------------------------------------------

/// Nilpotency indices of the two pairing images, when both are nilpotent.
fn image_nilpotency(spec: &MoritaContextSpec) -> Option<(usize, usize)> {
    let im_psi = IdealSet::new(&spec.ring_a, spec.psi_image(), Sidedness::TwoSided);
    let im_phi = IdealSet::new(&spec.ring_b, spec.phi_image(), Sidedness::TwoSided);
    let s = nilpotency_index(&im_psi).expect("two-sided")?;
    let t = nilpotency_index(&im_phi).expect("two-sided")?;
    Some((s, t))
}

fn check_t22(spec: &MoritaContextSpec) -> Outcome {
    if let Err(e) = spec.validate() {
        return Outcome::fail("context is not valid", json!({ "error": e.to_string() }));
    }
    let Some((s, t)) = image_nilpotency(spec) else {
        return Outcome::skipped("pairing images are not nilpotent");
    };
    let ring_t = match morita_ring(spec, OrderCap::default()) {
        Ok(r) => r,
        Err(e) => return Outcome::skipped(format!("context ring exceeds the cap: {e}")),
    };
    let sides_ok = {
        let lhs = crate::classify::is_periodic(&spec.ring_a).holds
            && crate::classify::is_periodic(&spec.ring_b).holds;
        let rhs = crate::classify::is_periodic(&ring_t).holds;
        lhs == rhs
    };
    if !sides_ok {
        return Outcome::fail("periodicity transfer equivalence broken", json!({}));
    }
    // Certified exponent chain, element by element.
    let (a_order, n_order, m_order) =
        (spec.ring_a.order(), spec.module_n.order, spec.module_m.order);
    let p_exp = s.max(t) as u64;
    let mut max_power = 0u64;
    for x in ring_t.elements() {
        let a = x % a_order;
        let b = x / (a_order * n_order * m_order);
        let m_exp = match pair_exponent(&spec.ring_a, &spec.ring_b, a, b) {
            Ok(m) => m,
            Err(e) => return Outcome::fail(e, json!({ "element": x })),
        };
        let da = spec.ring_a.sub(a, spec.ring_a.pow_wide(a, m_exp));
        let db = spec.ring_b.sub(b, spec.ring_b.pow_wide(b, m_exp));
        let la = spec.ring_a.nilpotency_exponent(da);
        let lb = spec.ring_b.nilpotency_exponent(db);
        let (Some(la), Some(lb)) = (la, lb) else {
            return Outcome::fail("diagonal differences not nilpotent", json!({ "element": x }));
        };
        let l = la.max(lb) as u64;
        let q = p_exp * (l + 1);
        let j = 2 * p_exp * (q + 1);
        let power = 2 * j * p_exp;
        max_power = max_power.max(power);
        let diff = ring_t.sub(x, ring_t.pow_wide(x, m_exp));
        if ring_t.pow_wide(diff, power) != 0 {
            return Outcome::fail(
                "certified exponent chain fails to annihilate",
                json!({ "element": x, "power": power }),
            );
        }
    }
    Outcome {
        verdict: CheckVerdict::Pass,
        detail: Some(format!(
            "images nilpotent with indices ({s}, {t}); certified annihilation up to exponent {max_power}"
        )),
        payload: Some(json!({ "s": s, "t": t, "max_power": max_power })),
    }
}

fn check_e25(spec: &MoritaContextSpec) -> Outcome {
    let reference = example_2_5_context(&zmod(2, OrderCap::default()).expect("Z2"));
    if spec.psi != reference.psi
        || spec.ring_a.content_hash() != reference.ring_a.content_hash()
        || spec.module_m.order != reference.module_m.order
        || spec.module_n.order != reference.module_n.order
    {
        return Outcome::skipped("input is not the block trivial-context fixture");
    }
    if !spec.psi_image().is_subset_of(&ElemSet::singleton(spec.ring_a.order(), 0)) {
        return Outcome::fail("pairings are not zero", json!({}));
    }
    let t = match morita_ring(spec, OrderCap::default()) {
        Ok(t) => t,
        Err(e) => return Outcome::fail("fixture failed to build", json!({ "error": e.to_string() })),
    };
    if !crate::classify::is_periodic(&t).holds {
        return Outcome::fail("block context ring not periodic", json!({}));
    }
    Outcome::pass_with(format!("context ring of order {} is periodic", t.order()))
}

fn check_t37(spec: &MoritaContextSpec) -> Outcome {
    if let Err(e) = spec.validate() {
        return Outcome::fail("context is not valid", json!({ "error": e.to_string() }));
    }
    if image_nilpotency(spec).is_none() {
        return Outcome::skipped("pairing images are not nilpotent");
    }
    let ring_t = match morita_ring(spec, OrderCap::default()) {
        Ok(r) => r,
        Err(e) => return Outcome::skipped(format!("context ring exceeds the cap: {e}")),
    };
    let az_a = RingAnalysis::new(&spec.ring_a);
    let az_b = RingAnalysis::new(&spec.ring_b);
    let az_t = RingAnalysis::new(&ring_t);
    let lhs = crate::classify::is_strongly_periodic(&az_a, false).holds
        && crate::classify::is_strongly_periodic(&az_b, false).holds;
    let rhs = crate::classify::is_strongly_periodic(&az_t, false).holds;
    equivalence(&[("corners strongly periodic", lhs), ("context ring strongly periodic", rhs)])
}

fn check_t41(spec: &MoritaContextSpec) -> Outcome {
    if let Err(e) = spec.validate() {
        return Outcome::fail("context is not valid", json!({ "error": e.to_string() }));
    }
    let j_a = crate::radicals::jacobson_radical(&spec.ring_a);
    let j_b = crate::radicals::jacobson_radical(&spec.ring_b);
    if !spec.psi_image().is_subset_of(j_a.members())
        || !spec.phi_image().is_subset_of(j_b.members())
    {
        return Outcome::skipped("pairing images are not inside the corner radicals");
    }
    let ring_t = match morita_ring(spec, OrderCap::default()) {
        Ok(r) => r,
        Err(e) => return Outcome::skipped(format!("context ring exceeds the cap: {e}")),
    };
    let az_a = RingAnalysis::new(&spec.ring_a);
    let az_b = RingAnalysis::new(&spec.ring_b);
    let corners = crate::classify::is_j_clean_like(&az_a).holds
        && crate::classify::is_j_clean_like(&az_b).holds;
    if !corners {
        return Outcome::skipped("corner rings are not J-clean-like");
    }
    let az_t = RingAnalysis::new(&ring_t);
    if !crate::classify::is_j_clean_like(&az_t).holds {
        return Outcome::fail("context ring is not J-clean-like", json!({}));
    }
    Outcome::pass()
}

// ---------------------------------------------------------------------------
// Ring + ideal checks
// ---------------------------------------------------------------------------

fn ideal_from_members<'r>(
    r: &'r FiniteRing,
    members: &[ElementId],
) -> Result<IdealSet<'r>, String> {
    let set = ElemSet::from_indices(r.order(), members.iter().copied());
    if !is_two_sided_ideal_set(r, &set) {
        return Err("member list is not a two-sided ideal".into());
    }
    Ok(IdealSet::new(r, set, Sidedness::TwoSided))
}

fn strongly_periodic_quotient(r: &FiniteRing, ideal: &IdealSet<'_>) -> bool {
    let (q, _) = quotient(r, ideal).expect("two-sided");
    let az = RingAnalysis::new(&q);
    crate::classify::is_strongly_periodic(&az, false).holds
}

fn check_l313(r: &FiniteRing, members: &[ElementId]) -> Outcome {
    let ideal = match ideal_from_members(r, members) {
        Ok(i) => i,
        Err(e) => return Outcome::fail(e, json!({})),
    };
    if nilpotency_index(&ideal).expect("two-sided").is_none() {
        return Outcome::skipped("ideal is not nilpotent");
    }
    let lhs = strongly_periodic_quotient(r, &ideal);
    let az = RingAnalysis::new(r);
    let rhs = crate::classify::is_strongly_periodic(&az, false).holds;
    implication("quotient strongly periodic", lhs, "ring strongly periodic", rhs)
}

fn check_t314(r: &FiniteRing, members: &[ElementId]) -> Outcome {
    let ideal = match ideal_from_members(r, members) {
        Ok(i) => i,
        Err(e) => return Outcome::fail(e, json!({})),
    };
    // Quotient verdicts across I, I^2, ... until the powers stabilize.
    let mut verdicts = Vec::new();
    let mut power = ideal.clone();
    loop {
        verdicts.push(strongly_periodic_quotient(r, &power));
        let next = ideal_power(&ideal, verdicts.len() + 1).expect("two-sided");
        if next.members() == power.members() {
            break;
        }
        power = next;
        if verdicts.len() > 16 {
            break; // powers of an ideal in a finite ring stabilize long before this
        }
    }
    let first = verdicts[0];
    if verdicts.iter().all(|&v| v == first) {
        Outcome::pass_with(format!(
            "agreeing verdict {first} across {} ideal powers",
            verdicts.len()
        ))
    } else {
        Outcome::fail("verdicts diverge across ideal powers", json!({ "verdicts": verdicts }))
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Runs one check on one input.
pub fn run_check(
    id: &str,
    input: &CheckInput<'_>,
    config: &SuiteConfig,
) -> Result<VerdictReport, CheckError> {
    let def = check_def(id).ok_or_else(|| CheckError::UnknownId(id.to_string()))?;
    let started = Instant::now();
    let outcome = match (def.schema, input) {
        (InputSchema::Ring, CheckInput::Ring { ring, .. }) => {
            let prepared = Prepared::new(ring);
            run_ring_check(id, &prepared, config)
        }
        (InputSchema::Context, CheckInput::Context { spec, .. }) => run_context_check(id, spec),
        (InputSchema::RingWithIdeal, CheckInput::RingWithIdeal { ring, ideal, .. }) => {
            run_ideal_check(id, ring, ideal)
        }
        _ => {
            return Err(CheckError::SchemaMismatch {
                id: id.to_string(),
                expected: match def.schema {
                    InputSchema::Ring => "ring",
                    InputSchema::Context => "Morita context",
                    InputSchema::RingWithIdeal => "ring plus ideal",
                },
            })
        }
    };
    Ok(VerdictReport {
        check: id.to_string(),
        input: input.describe(),
        verdict: outcome.verdict,
        detail: outcome.detail,
        payload: outcome.payload,
        millis: started.elapsed().as_millis(),
    })
}

fn run_ring_check(id: &str, p: &Prepared, config: &SuiteConfig) -> Outcome {
    match id {
        "T1.1" => check_t11(p),
        "L2.1" => check_l21(p),
        "C2.3" => check_c23(p),
        "C2.4" => check_c24(p),
        "L2.6" => check_l26(p),
        "T2.7" | "C2.8" => check_t27(p),
        "T3.1" => check_t31(p),
        "C3.2" => check_c32(p),
        "T3.3" => check_t33(p),
        "C3.4" => check_c34(p),
        "C3.5" => check_c35(p),
        "E3.6" => check_e36(p),
        "C3.8" => check_c38(p),
        "E3.9" => check_e39(p),
        "T3.10" => check_t310(p),
        "C3.11" => check_c311(p, config),
        "L3.15" => check_l315(p),
        "T3.16" => check_t316(p),
        "C4.2" => check_c42(p),
        "C4.3" => check_c43(p),
        "P4.4" => check_p44(p),
        "P4.5" => check_p45(p),
        "E4.6" => check_e46(p),
        "L4.7" => check_l47(p),
        "T4.8" => check_t48(p),
        "C4.9" => check_c49(p),
        "L4.11" => check_l411(p),
        "L4.12" => check_l412(p),
        "T4.13" => check_t413(p, config),
        "C4.14" => check_c414(p),
        _ => unreachable!("ring check {id} not wired"),
    }
}

fn run_context_check(id: &str, spec: &MoritaContextSpec) -> Outcome {
    match id {
        "T2.2" => check_t22(spec),
        "E2.5" => check_e25(spec),
        "T3.7" => check_t37(spec),
        "T4.1" => check_t41(spec),
        _ => unreachable!("context check {id} not wired"),
    }
}

fn run_ideal_check(id: &str, r: &FiniteRing, members: &[ElementId]) -> Outcome {
    match id {
        "L3.13" => check_l313(r, members),
        "T3.14" => check_t314(r, members),
        _ => unreachable!("ideal check {id} not wired"),
    }
}

/// The Morita-context fixtures the suite exercises the context checks on.
pub fn context_fixtures() -> Vec<(String, MoritaContextSpec)> {
    let z2 = zmod(2, OrderCap::default()).expect("Z2");
    let z4 = zmod(4, OrderCap::default()).expect("Z4");
    let zx = crate::catalog::Recipe::SkewSeries {
        base: Box::new(crate::catalog::Recipe::Zmod(2)),
        n: 2,
        twist: crate::catalog::Twist::Identity,
    }
    .build(OrderCap::default())
    .expect("Z2[x]/(x^2)");
    vec![
        ("E3.9".to_string(), example_3_9_context()),
        ("E2.5(Z2)".to_string(), example_2_5_context(&z2)),
        (
            "M(2)(Z4) as context".to_string(),
            generalized_matrix_context(&z4, 2).expect("2 is central"),
        ),
        (
            "M(x)(Z2[x]/(x^2)) as context".to_string(),
            generalized_matrix_context(&zx, 2).expect("x is central"),
        ),
        (
            "M(0)(Z2) trivial context".to_string(),
            generalized_matrix_context(&z2, 0).expect("0 is central"),
        ),
        (
            "M(1)(Z2) unit-scale context".to_string(),
            generalized_matrix_context(&z2, 1).expect("1 is central"),
        ),
    ]
}

/// Ideal fixtures per ring: the Jacobson radical, the zero ideal, and (for
/// small rings) every distinct principal two-sided ideal.
fn ideal_fixtures(az: &RingAnalysis) -> Vec<(String, Vec<ElementId>)> {
    let r = az.ring;
    let mut out = vec![
        ("J(R)".to_string(), az.jacobson.to_vec()),
        ("zero".to_string(), vec![0]),
    ];
    if r.order() <= ORACLE_ORDER_CAP {
        let mut seen: Vec<Vec<ElementId>> = out.iter().map(|(_, m)| m.clone()).collect();
        for x in r.elements() {
            let i = crate::ideals::ideal_generated(r, x, Sidedness::TwoSided);
            let members = i.to_vec();
            if !seen.contains(&members) {
                seen.push(members.clone());
                out.push((format!("({x})"), members));
            }
        }
    }
    out
}

/// Runs every registered check on every applicable input. `only` restricts
/// to a single check id.
pub fn run_suite(
    catalog: &[CatalogEntry],
    config: &SuiteConfig,
    only: Option<&str>,
) -> Result<SuiteReport, CheckError> {
    if let Some(id) = only {
        if check_def(id).is_none() {
            return Err(CheckError::UnknownId(id.to_string()));
        }
    }
    let wanted = |id: &str| only.map_or(true, |o| o == id);
    let mut reports = Vec::new();

    // Ring-schema checks share one Prepared per catalog entry.
    let ring_checks: Vec<&CheckDef> = CHECKS
        .iter()
        .filter(|c| c.schema == InputSchema::Ring && wanted(c.id))
        .collect();
    let ideal_checks: Vec<&CheckDef> = CHECKS
        .iter()
        .filter(|c| c.schema == InputSchema::RingWithIdeal && wanted(c.id))
        .collect();
    for entry in catalog {
        if ring_checks.is_empty() && ideal_checks.is_empty() {
            break;
        }
        let prepared = Prepared::new(&entry.ring);
        for def in &ring_checks {
            let started = Instant::now();
            let outcome = run_ring_check(def.id, &prepared, config);
            reports.push(VerdictReport {
                check: def.id.to_string(),
                input: format!("{} [{}]", entry.name, &entry.hash[..12]),
                verdict: outcome.verdict,
                detail: outcome.detail,
                payload: outcome.payload,
                millis: started.elapsed().as_millis(),
            });
        }
        for def in &ideal_checks {
            for (tag, members) in ideal_fixtures(&prepared.az) {
                let started = Instant::now();
                let outcome = run_ideal_check(def.id, &entry.ring, &members);
                reports.push(VerdictReport {
                    check: def.id.to_string(),
                    input: format!("{} / {} [{}]", entry.name, tag, &entry.hash[..12]),
                    verdict: outcome.verdict,
                    detail: outcome.detail,
                    payload: outcome.payload,
                    millis: started.elapsed().as_millis(),
                });
            }
        }
    }

    for (name, spec) in context_fixtures() {
        for def in CHECKS.iter().filter(|c| c.schema == InputSchema::Context) {
            if !wanted(def.id) {
                continue;
            }
            let input = CheckInput::Context { name: name.clone(), spec: &spec };
            let started = Instant::now();
            let outcome = run_context_check(def.id, &spec);
            reports.push(VerdictReport {
                check: def.id.to_string(),
                input: input.describe(),
                verdict: outcome.verdict,
                detail: outcome.detail,
                payload: outcome.payload,
                millis: started.elapsed().as_millis(),
            });
        }
    }

    let count = |v: CheckVerdict| reports.iter().filter(|r| r.verdict == v).count();
    Ok(SuiteReport {
        config: config.clone(),
        passes: count(CheckVerdict::Pass),
        fails: count(CheckVerdict::Fail),
        skips: count(CheckVerdict::Skipped),
        inconclusive: count(CheckVerdict::Inconclusive),
        reports,
    })
}

/// Pass/fail/skip counts per check id, for compact summaries.
pub fn summarize(report: &SuiteReport) -> BTreeMap<String, (usize, usize, usize)> {
    let mut out: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    for r in &report.reports {
        let slot = out.entry(r.check.clone()).or_default();
        match r.verdict {
            CheckVerdict::Pass => slot.0 += 1,
            CheckVerdict::Fail => slot.1 += 1,
            CheckVerdict::Skipped | CheckVerdict::Inconclusive => slot.2 += 1,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::matrix_ring;

    fn z(n: usize) -> FiniteRing {
        zmod(n, OrderCap::default()).unwrap()
    }

    #[test]
    fn registry_is_complete() {
        assert_eq!(CHECKS.len(), 37);
        assert!(check_def("T2.2").is_some());
        assert!(check_def("C4.14").is_some());
        assert!(check_def("bogus").is_none());
    }

    #[test]
    fn unknown_id_and_schema_mismatch_are_errors() {
        let z4 = z(4);
        let input = CheckInput::Ring { name: "Z4".into(), ring: &z4 };
        assert!(matches!(
            run_check("nope", &input, &SuiteConfig::default()),
            Err(CheckError::UnknownId(_))
        ));
        assert!(matches!(
            run_check("T2.2", &input, &SuiteConfig::default()),
            Err(CheckError::SchemaMismatch { .. })
        ));
    }

    #[test]
    fn t11_and_l21_pass_on_small_rings() {
        for n in [2usize, 4, 6] {
            let r = z(n);
            let p = Prepared::new(&r);
            assert_eq!(check_t11(&p).verdict, CheckVerdict::Pass, "T1.1 on Z{n}");
            assert_eq!(check_l21(&p).verdict, CheckVerdict::Pass, "L2.1 on Z{n}");
        }
    }

    #[test]
    fn t33_passes_even_where_both_sides_fail() {
        let m2 = matrix_ring(&z(2), 2, OrderCap::default()).unwrap();
        let p = Prepared::new(&m2);
        assert!(!p.holds("strongly-periodic"));
        assert_eq!(check_t33(&p).verdict, CheckVerdict::Pass);
        assert_eq!(check_t310(&p).verdict, CheckVerdict::Pass);
    }

    #[test]
    fn t22_passes_on_example_39_and_skips_on_unit_scale() {
        let spec = example_3_9_context();
        let out = check_t22(&spec);
        assert_eq!(out.verdict, CheckVerdict::Pass, "{:?}", out.detail);

        let z2 = z(2);
        let unit_scale = generalized_matrix_context(&z2, 1).unwrap();
        assert_eq!(check_t22(&unit_scale).verdict, CheckVerdict::Skipped);
    }

    #[test]
    fn e46_passes_on_its_fixture_and_skips_elsewhere() {
        let t2z3 = crate::catalog::Recipe::Triangular {
            base: Box::new(crate::catalog::Recipe::Zmod(3)),
            n: 2,
            twist: crate::catalog::Twist::Identity,
        }
        .build(OrderCap::default())
        .unwrap();
        let p = Prepared::new(&t2z3);
        assert_eq!(check_e46(&p).verdict, CheckVerdict::Pass);
        let z4 = z(4);
        let p4 = Prepared::new(&z4);
        assert_eq!(check_e46(&p4).verdict, CheckVerdict::Skipped);
    }

    #[test]
    fn t413_passes_on_z4_and_skips_on_m2() {
        let cfg = SuiteConfig::default();
        let z4 = z(4);
        let p = Prepared::new(&z4);
        assert_eq!(check_t413(&p, &cfg).verdict, CheckVerdict::Pass);
        let m2 = matrix_ring(&z(2), 2, OrderCap::default()).unwrap();
        let pm = Prepared::new(&m2);
        let out = check_t413(&pm, &cfg);
        assert_eq!(out.verdict, CheckVerdict::Skipped);
        assert!(out.payload.is_some(), "failing game must carry its witness");
    }

    #[test]
    fn l313_and_t314_on_z4() {
        let z4 = z(4);
        let j = vec![0, 2];
        assert_eq!(check_l313(&z4, &j).verdict, CheckVerdict::Pass);
        assert_eq!(check_t314(&z4, &j).verdict, CheckVerdict::Pass);
        assert_eq!(check_t314(&z4, &[0]).verdict, CheckVerdict::Pass);
        // Not an ideal: rejected.
        assert_eq!(check_l313(&z4, &[0, 1]).verdict, CheckVerdict::Fail);
    }
}
