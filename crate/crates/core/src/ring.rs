//! Finite associative unital rings given by explicit addition and
//! multiplication tables, plus the element-level periodicity data every other
//! module consumes.
//!
//! Elements are identified by their table index. Index 0 is always the
//! additive zero; rings are immutable once built, so references can be shared
//! freely across threads.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::set::ElemSet;

/// Index of an element inside a specific ring's tables.
pub type ElementId = usize;

/// How a ring came to exist. Raw imports get the full axiom scan; rings
/// produced by the constructors in [`crate::construct`] are property-tested
/// instead of being re-scanned on every load.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    RawImport,
    ConstructorBuilt,
}

/// Unvalidated ring tables, row-major, with zero at index 0 by convention.
#[derive(Clone, Debug)]
pub struct RawRing {
    pub order: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub one: usize,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableKind {
    Add,
    Mul,
}

impl std::fmt::Display for TableKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableKind::Add => write!(f, "add"),
            TableKind::Mul => write!(f, "mul"),
        }
    }
}

/// A violated ring axiom together with the first offending tuple found.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum AxiomViolation {
    #[error("tables are not {order}x{order} or indices are malformed")]
    BadShape { order: usize },
    #[error("{table}[{row}][{col}] = {value} is outside [0, {order})")]
    EntryOutOfRange {
        table: TableKind,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("addition not commutative: witness ({a}, {b})")]
    AddNotCommutative { a: ElementId, b: ElementId },
    #[error("addition not associative: witness ({a}, {b}, {c})")]
    AddNotAssociative { a: ElementId, b: ElementId, c: ElementId },
    #[error("index 0 is not an additive identity: witness {a}")]
    ZeroNotIdentity { a: ElementId },
    #[error("element {a} has no additive inverse")]
    MissingNegative { a: ElementId },
    #[error("multiplication not associative: witness ({a}, {b}, {c})")]
    MulNotAssociative { a: ElementId, b: ElementId, c: ElementId },
    #[error("left distributivity fails: witness ({a}, {b}, {c})")]
    NotLeftDistributive { a: ElementId, b: ElementId, c: ElementId },
    #[error("right distributivity fails: witness ({a}, {b}, {c})")]
    NotRightDistributive { a: ElementId, b: ElementId, c: ElementId },
    #[error("one not identity: witness {a}")]
    OneNotIdentity { a: ElementId },
    #[error("one coincides with zero in a ring of order {order}")]
    OneIsZero { order: usize },
}

/// A finite associative ring with identity, backed by full Cayley tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    one: ElementId,
    labels: Option<Vec<String>>,
    provenance: Provenance,
}

/// Eventual periodicity data for one element: the least `k >= 1` and then the
/// least `l > k` with `a^k = a^l`, plus the derived exponents used by the
/// potent/nilpotent splitting.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PeriodicityWitness {
    pub element: ElementId,
    pub k: usize,
    pub l: usize,
    /// `k * (l - k)`; `a^n` is idempotent and `(a - a^(n+1))^n = 0`.
    pub n: usize,
    /// `1 + (l - k)`; `a^(n+1)` raised to this power returns to itself.
    pub potent_power: usize,
    /// `l - k - 1`; `a^k = a^(k+1) * a^monomial_degree`.
    pub monomial_degree: usize,
}

/// Splitting of an element into a potent part plus a commuting nilpotent,
/// following the exponent recipe attached to its periodicity witness.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PotentDecomposition {
    pub element: ElementId,
    pub p: ElementId,
    pub w: ElementId,
    /// `m >= 2` with `p^m = p`.
    pub potency_exponent: usize,
    /// least `t >= 1` with `w^t = 0`.
    pub nilpotency_index: usize,
    pub commutes: bool,
}

/// `a = e*u + w` with `e` idempotent, `u^m = 1`, `w` in the prime radical,
/// and `e`, `u`, `w` pairwise commuting.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EuwDecomposition {
    pub element: ElementId,
    pub e: ElementId,
    pub u: ElementId,
    /// least `m >= 1` with `u^m = 1`.
    pub torsion_exponent: usize,
    pub w: ElementId,
}

/// Internal power-sequence summary: `powers[i] = a^(i+1)` for `i < l-1`,
/// after which exponents reduce modulo the cycle length `l - k`.
pub(crate) struct PowerSeq {
    pub powers: Vec<ElementId>,
    pub k: usize,
    pub l: usize,
}

impl PowerSeq {
    /// Value of `a^e` for any `e >= 1`, reduced through the cycle.
    pub fn eval(&self, e: u64) -> ElementId {
        let e = if e < self.l as u64 {
            e as usize
        } else {
            let cycle = (self.l - self.k) as u64;
            self.k + ((e - self.k as u64) % cycle) as usize
        };
        self.powers[e - 1]
    }
}

impl FiniteRing {
    /// Builds a ring from closures without running the axiom scan. Callers
    /// guarantee the axioms; constructor outputs are covered by property
    /// tests instead. The closures must map the all-zero encoding to index 0.
    pub(crate) fn build_with(
        order: usize,
        one: ElementId,
        labels: Option<Vec<String>>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> FiniteRing {
        assert!(order >= 1);
        let mut add_t = vec![0u32; order * order];
        let mut mul_t = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                add_t[a * order + b] = add(a, b) as u32;
                mul_t[a * order + b] = mul(a, b) as u32;
            }
        }
        Self::assemble(order, add_t, mul_t, one, labels, Provenance::ConstructorBuilt)
    }

    fn assemble(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        one: ElementId,
        labels: Option<Vec<String>>,
        provenance: Provenance,
    ) -> FiniteRing {
        let mut neg = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] == 0 {
                    neg[a] = b as u32;
                    break;
                }
            }
            assert!(neg[a] != u32::MAX, "element {a} has no additive inverse");
        }
        assert!(add[0 * order + 0] == 0, "zero must sit at index 0");
        FiniteRing {
            order,
            add,
            mul,
            neg,
            one,
            labels,
            provenance,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementId {
        0
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    /// `a^k` by repeated table lookup; `a^0 = 1`.
    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `a^e` for exponents too large to iterate, reduced through the power
    /// cycle of `a` (exact: the power sequence is eventually periodic).
    pub fn pow_wide(&self, a: ElementId, e: u64) -> ElementId {
        if e == 0 {
            return self.one;
        }
        self.power_seq(a).eval(e)
    }

    pub(crate) fn power_seq(&self, a: ElementId) -> PowerSeq {
        let mut first_seen = vec![usize::MAX; self.order];
        let mut powers = Vec::new();
        let mut cur = a;
        let mut exp = 1usize;
        loop {
            if first_seen[cur] != usize::MAX {
                let k = first_seen[cur];
                return PowerSeq { powers, k, l: exp };
            }
            first_seen[cur] = exp;
            powers.push(cur);
            cur = self.mul(cur, a);
            exp += 1;
        }
    }

    /// The least `k >= 1`, then least `l > k`, with `a^k = a^l`, plus the
    /// derived exponents. Always succeeds: power sequences in a finite ring
    /// repeat within `order + 1` steps.
    pub fn power_cycle(&self, a: ElementId) -> PeriodicityWitness {
        let seq = self.power_seq(a);
        let (k, l) = (seq.k, seq.l);
        PeriodicityWitness {
            element: a,
            k,
            l,
            n: k * (l - k),
            potent_power: 1 + (l - k),
            monomial_degree: l - k - 1,
        }
    }

    /// Least `m >= 2` with `a^m = a`, if any.
    pub fn potency_exponent(&self, a: ElementId) -> Option<usize> {
        let seq = self.power_seq(a);
        (2..=seq.l).find(|&m| seq.eval(m as u64) == a)
    }

    /// Least `t >= 1` with `a^t = 0`, if `a` is nilpotent.
    pub fn nilpotency_exponent(&self, a: ElementId) -> Option<usize> {
        let seq = self.power_seq(a);
        seq.powers.iter().position(|&p| p == 0).map(|i| i + 1)
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> ElemSet {
        ElemSet::from_indices(self.order, self.elements().filter(|&e| self.is_idempotent(e)))
    }

    /// Two-sided inverse of `a`, if `a` is a unit.
    pub fn unit_inverse(&self, a: ElementId) -> Option<ElementId> {
        self.elements()
            .find(|&b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    pub fn is_unit(&self, a: ElementId) -> bool {
        self.unit_inverse(a).is_some()
    }

    pub fn units(&self) -> ElemSet {
        ElemSet::from_indices(self.order, self.elements().filter(|&a| self.is_unit(a)))
    }

    /// Least `m >= 1` with `u^m = 1`; `None` when no power of `u` is 1.
    pub fn multiplicative_order(&self, u: ElementId) -> Option<usize> {
        let seq = self.power_seq(u);
        seq.powers.iter().position(|&p| p == self.one).map(|i| i + 1)
    }

    pub fn center(&self) -> ElemSet {
        ElemSet::from_indices(
            self.order,
            self.elements()
                .filter(|&c| self.elements().all(|r| self.mul(c, r) == self.mul(r, c))),
        )
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Potent + nilpotent splitting of `a` via its power cycle: with
    /// `n = k(l-k)`, take `p = a^(n+1)` and `w = a - p`. The three defining
    /// identities are asserted before returning.
    pub fn potent_decomposition(&self, a: ElementId) -> PotentDecomposition {
        let wit = self.power_cycle(a);
        let seq = self.power_seq(a);
        let p = seq.eval(wit.n as u64 + 1);
        let w = self.sub(a, p);
        assert_eq!(
            self.pow_wide(p, wit.potent_power as u64),
            p,
            "potent part failed p^m = p"
        );
        let nil = self
            .nilpotency_exponent(w)
            .expect("difference part is not nilpotent");
        assert!(nil <= wit.n, "nilpotency index exceeds the witness bound");
        assert_eq!(self.add(p, w), a, "decomposition does not reassemble");
        let commutes = self.mul(p, w) == self.mul(w, p);
        assert!(commutes, "potent and nilpotent parts do not commute");
        PotentDecomposition {
            element: a,
            p,
            w,
            potency_exponent: wit.potent_power,
            nilpotency_index: nil,
            commutes,
        }
    }

    /// The opposite ring: same addition, reversed multiplication.
    pub fn opposite(&self) -> FiniteRing {
        let mut mul = vec![0u32; self.order * self.order];
        for a in 0..self.order {
            for b in 0..self.order {
                mul[a * self.order + b] = self.mul[b * self.order + a];
            }
        }
        FiniteRing {
            order: self.order,
            add: self.add.clone(),
            mul,
            neg: self.neg.clone(),
            one: self.one,
            labels: self.labels.clone(),
            provenance: Provenance::ConstructorBuilt,
        }
    }

    pub fn label(&self, a: ElementId) -> String {
        match &self.labels {
            Some(ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Row-major addition table as plain indices (for serialization).
    pub fn add_table(&self) -> Vec<usize> {
        self.add.iter().map(|&v| v as usize).collect()
    }

    /// Row-major multiplication table as plain indices (for serialization).
    pub fn mul_table(&self) -> Vec<usize> {
        self.mul.iter().map(|&v| v as usize).collect()
    }

    /// SHA-256 over the canonical bytes of `(order, one, add, mul)`.
    /// Labels and provenance do not participate.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order as u32).to_le_bytes());
        h.update((self.one as u32).to_le_bytes());
        for &v in &self.add {
            h.update(v.to_le_bytes());
        }
        for &v in &self.mul {
            h.update(v.to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

/// Runs the full axiom scan over raw tables. On success the ring carries
/// [`Provenance::RawImport`]; on failure every violated axiom is reported,
/// each with the first offending tuple.
pub fn validate_ring(raw: &RawRing) -> Result<FiniteRing, Vec<AxiomViolation>> {
    let n = raw.order;
    let mut errs = Vec::new();
    if n == 0 || raw.add.len() != n * n || raw.mul.len() != n * n {
        return Err(vec![AxiomViolation::BadShape { order: n }]);
    }
    if raw.one >= n {
        return Err(vec![AxiomViolation::BadShape { order: n }]);
    }
    for (kind, table) in [(TableKind::Add, &raw.add), (TableKind::Mul, &raw.mul)] {
        if let Some((pos, &value)) = table.iter().enumerate().find(|(_, &v)| v >= n) {
            errs.push(AxiomViolation::EntryOutOfRange {
                table: kind,
                row: pos / n,
                col: pos % n,
                value,
                order: n,
            });
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }

    let add = |a: usize, b: usize| raw.add[a * n + b];
    let mul = |a: usize, b: usize| raw.mul[a * n + b];

    'comm: for a in 0..n {
        for b in 0..n {
            if add(a, b) != add(b, a) {
                errs.push(AxiomViolation::AddNotCommutative { a, b });
                break 'comm;
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| add(0, a) != a || add(a, 0) != a) {
        errs.push(AxiomViolation::ZeroNotIdentity { a });
    }
    if let Some(a) = (0..n).find(|&a| (0..n).all(|b| add(a, b) != 0)) {
        errs.push(AxiomViolation::MissingNegative { a });
    }
    'aassoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add(add(a, b), c) != add(a, add(b, c)) {
                    errs.push(AxiomViolation::AddNotAssociative { a, b, c });
                    break 'aassoc;
                }
            }
        }
    }
    'massoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    errs.push(AxiomViolation::MulNotAssociative { a, b, c });
                    break 'massoc;
                }
            }
        }
    }
    'ldist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                    errs.push(AxiomViolation::NotLeftDistributive { a, b, c });
                    break 'ldist;
                }
            }
        }
    }
    'rdist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(add(a, b), c) != add(mul(a, c), mul(b, c)) {
                    errs.push(AxiomViolation::NotRightDistributive { a, b, c });
                    break 'rdist;
                }
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| mul(raw.one, a) != a || mul(a, raw.one) != a) {
        errs.push(AxiomViolation::OneNotIdentity { a });
    }
    if n >= 2 && raw.one == 0 {
        errs.push(AxiomViolation::OneIsZero { order: n });
    }

    if !errs.is_empty() {
        return Err(errs);
    }
    let add_t: Vec<u32> = raw.add.iter().map(|&v| v as u32).collect();
    let mul_t: Vec<u32> = raw.mul.iter().map(|&v| v as u32).collect();
    Ok(FiniteRing::assemble(
        n,
        add_t,
        mul_t,
        raw.one,
        raw.labels.clone(),
        Provenance::RawImport,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Z_n tables computed straight from modular arithmetic, so table-based
    /// results can be checked against integer arithmetic.
    fn zn_raw(n: usize) -> RawRing {
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = (a + b) % n;
                mul[a * n + b] = (a * b) % n;
            }
        }
        RawRing {
            order: n,
            add,
            mul,
            one: if n == 1 { 0 } else { 1 },
            labels: None,
        }
    }

    fn zn(n: usize) -> FiniteRing {
        validate_ring(&zn_raw(n)).expect("Z_n must validate")
    }

    #[test]
    fn z2_validates() {
        let r = zn(2);
        assert_eq!(r.order(), 2);
        assert_eq!(r.provenance(), Provenance::RawImport);
    }

    #[test]
    fn z4_validates_with_full_scan() {
        let r = zn(4);
        assert_eq!(r.add(2, 3), 1);
        assert_eq!(r.mul(2, 2), 0);
        for a in r.elements() {
            assert_eq!(r.add(a, r.neg(a)), 0);
        }
    }

    #[test]
    fn broken_one_is_reported() {
        let mut raw = zn_raw(2);
        raw.mul[1 * 2 + 1] = 0; // 1*1 = 0
        let errs = validate_ring(&raw).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, AxiomViolation::OneNotIdentity { .. })));
    }

    #[test]
    fn every_violated_axiom_is_listed() {
        // Garbage mul table: associativity, distributivity and identity all break.
        let mut raw = zn_raw(3);
        raw.mul = vec![0, 2, 1, 2, 2, 2, 1, 0, 0];
        let errs = validate_ring(&raw).unwrap_err();
        assert!(errs.len() >= 2, "expected several violations, got {errs:?}");
    }

    #[test]
    fn out_of_range_entry() {
        let mut raw = zn_raw(2);
        raw.add[3] = 7;
        let errs = validate_ring(&raw).unwrap_err();
        assert_eq!(
            errs,
            vec![AxiomViolation::EntryOutOfRange {
                table: TableKind::Add,
                row: 1,
                col: 1,
                value: 7,
                order: 2
            }]
        );
    }

    #[test]
    fn zero_ring_is_legal() {
        let r = zn(1);
        assert_eq!(r.one(), 0);
        assert_eq!(r.pow(0, 5), 0);
    }

    #[test]
    fn one_equals_zero_rejected_at_order_two() {
        let mut raw = zn_raw(2);
        // Claim one = 0; mul table of Z2 does not make 0 an identity anyway,
        // so both violations surface.
        raw.one = 0;
        let errs = validate_ring(&raw).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, AxiomViolation::OneNotIdentity { .. })));
    }

    #[test]
    fn pow_matches_integer_arithmetic() {
        let r = zn(6);
        for a in 0..6usize {
            for k in 0..10usize {
                let expect = a.pow(k as u32) % 6;
                assert_eq!(r.pow(a, k), expect, "{a}^{k} mod 6");
            }
        }
        assert_eq!(zn(4).pow(2, 2), 0);
        assert_eq!(zn(6).pow(2, 3), 2);
    }

    #[test]
    fn pow_of_one_is_one() {
        let r = zn(5);
        for k in 0..8 {
            assert_eq!(r.pow(1, k), 1);
        }
    }

    #[test]
    fn power_cycle_z4() {
        let r = zn(4);
        let w = r.power_cycle(2);
        assert_eq!((w.k, w.l), (2, 3));
        assert_eq!(w.n, 2);
        let one_cycle = r.power_cycle(1);
        assert_eq!((one_cycle.k, one_cycle.l), (1, 2));
    }

    #[test]
    fn power_cycle_z6() {
        let r = zn(6);
        let w = r.power_cycle(2);
        assert_eq!((w.k, w.l), (1, 3));
        assert_eq!(w.n, 2);
    }

    #[test]
    fn power_cycle_is_minimal() {
        // Minimality oracle: re-derive (k, l) by scanning all pairs in
        // lexicographic order with plain pow.
        for n in 2..=9usize {
            let r = zn(n);
            for a in r.elements() {
                let w = r.power_cycle(a);
                let mut expect = None;
                'outer: for k in 1..=(n + 1) {
                    for l in (k + 1)..=(n + 2) {
                        if r.pow(a, k) == r.pow(a, l) {
                            expect = Some((k, l));
                            break 'outer;
                        }
                    }
                }
                assert_eq!(Some((w.k, w.l)), expect, "Z{n}, a={a}");
                assert_eq!(r.pow(a, w.k), r.pow(a, w.l));
            }
        }
    }

    #[test]
    fn witness_identities_hold() {
        for n in 1..=9usize {
            let r = zn(n);
            for a in r.elements() {
                let w = r.power_cycle(a);
                // a^k = a^(k+1) * a^(l-k-1)
                assert_eq!(
                    r.pow(a, w.k),
                    r.mul(r.pow(a, w.k + 1), r.pow(a, w.monomial_degree)),
                    "monomial identity in Z{n} at {a}"
                );
                // (a - a^(n+1))^n = 0
                let diff = r.sub(a, r.pow(a, w.n + 1));
                assert_eq!(r.pow(diff, w.n), 0, "nilpotency identity in Z{n} at {a}");
                // a^(k(l-k)) is idempotent
                assert!(r.is_idempotent(r.pow(a, w.n)), "idempotent power in Z{n} at {a}");
            }
        }
    }

    #[test]
    fn pow_wide_agrees_with_pow() {
        let r = zn(6);
        for a in r.elements() {
            for e in 0..40u64 {
                assert_eq!(r.pow_wide(a, e), r.pow(a, e as usize));
            }
        }
        // Large exponent sanity: 5 has multiplicative order 2 mod 6.
        assert_eq!(r.pow_wide(5, 1 << 40), 1);
        assert_eq!(r.pow_wide(5, (1 << 40) + 1), 5);
    }

    #[test]
    fn units_of_z4() {
        let r = zn(4);
        assert_eq!(r.units().to_vec(), vec![1, 3]);
        assert_eq!(r.unit_inverse(3), Some(3));
        assert!(!r.is_unit(2));
    }

    #[test]
    fn units_form_a_group() {
        for n in 2..=9usize {
            let r = zn(n);
            let u = r.units();
            assert!(u.contains(r.one()));
            for a in u.iter() {
                assert!(u.contains(r.unit_inverse(a).unwrap()));
                for b in u.iter() {
                    assert!(u.contains(r.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn center_of_commutative_ring_is_everything() {
        let r = zn(6);
        assert_eq!(r.center().len(), 6);
        assert!(r.is_commutative());
    }

    #[test]
    fn potency_exponents() {
        let z6 = zn(6);
        assert_eq!(z6.potency_exponent(3), Some(2));
        assert_eq!(z6.potency_exponent(2), Some(3));
        let z4 = zn(4);
        assert_eq!(z4.potency_exponent(2), None);
        assert_eq!(z4.idempotents().to_vec(), vec![0, 1]);
    }

    #[test]
    fn nilpotency_exponents() {
        let z4 = zn(4);
        assert_eq!(z4.nilpotency_exponent(2), Some(2));
        assert_eq!(z4.nilpotency_exponent(0), Some(1));
        assert_eq!(z4.nilpotency_exponent(3), None);
    }

    #[test]
    fn potent_decomposition_z4() {
        let r = zn(4);
        let d = r.potent_decomposition(2);
        assert_eq!((d.p, d.w), (0, 2));
        assert_eq!(d.nilpotency_index, 2);
        assert!(d.commutes);
    }

    #[test]
    fn potent_decomposition_already_potent() {
        let r = zn(6);
        let d = r.potent_decomposition(2);
        assert_eq!((d.p, d.w), (2, 0));
        let z = r.potent_decomposition(0);
        assert_eq!((z.p, z.w), (0, 0));
    }

    #[test]
    fn potent_decomposition_reassembles_everywhere() {
        for n in 1..=9usize {
            let r = zn(n);
            for a in r.elements() {
                let d = r.potent_decomposition(a);
                assert_eq!(r.add(d.p, d.w), a);
                assert!(d.p == 0 || r.potency_exponent(d.p).is_some());
            }
        }
    }

    #[test]
    fn opposite_of_commutative_is_identical() {
        let r = zn(5);
        let op = r.opposite();
        assert_eq!(r.mul_table(), op.mul_table());
    }

    #[test]
    fn content_hash_ignores_labels() {
        let mut raw = zn_raw(3);
        let r1 = validate_ring(&raw).unwrap();
        raw.labels = Some(vec!["a".into(), "b".into(), "c".into()]);
        let r2 = validate_ring(&raw).unwrap();
        assert_eq!(r1.content_hash(), r2.content_hash());
        let other = zn(4);
        assert_ne!(r1.content_hash(), other.content_hash());
    }

    #[test]
    fn multiplicative_order_of_units() {
        let r = zn(7);
        assert_eq!(r.multiplicative_order(1), Some(1));
        assert_eq!(r.multiplicative_order(6), Some(2));
        assert_eq!(r.multiplicative_order(3), Some(6));
        assert_eq!(r.multiplicative_order(0), None);
    }
}
