//! Morita-context rings, scaled 2x2 generalized matrix rings, and trivial
//! extensions. Tensor products are never materialized: the pairings are
//! plain tables whose balance over the middle ring is checked explicitly.

use super::{zmod, ConstructError, OrderCap, Radix};
use crate::ring::{ElementId, FiniteRing};
use crate::set::ElemSet;

/// A finite bimodule given by tables: an abelian group together with a left
/// action of one ring and a right action of another.
///
/// `add` is row-major `order x order` with zero at index 0; `left` is
/// row-major `(left ring order) x order`; `right` is row-major
/// `order x (right ring order)`.
#[derive(Clone, Debug)]
pub struct BimoduleSpec {
    pub order: usize,
    pub add: Vec<usize>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BimoduleSpec {
    pub fn add_of(&self, m1: usize, m2: usize) -> usize {
        self.add[m1 * self.order + m2]
    }

    pub fn left_of(&self, r: ElementId, m: usize) -> usize {
        self.left[r * self.order + m]
    }

    pub fn right_of(&self, m: usize, s: ElementId) -> usize {
        self.right[m * right_width(self) + s]
    }

    /// The ring itself as a bimodule over (left, right) = (R, R).
    pub fn regular(r: &FiniteRing) -> BimoduleSpec {
        let n = r.order();
        let mut add = vec![0; n * n];
        let mut act = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = r.add(a, b);
                act[a * n + b] = r.mul(a, b);
            }
        }
        BimoduleSpec {
            order: n,
            add,
            left: act.clone(),
            right: act,
        }
    }

    /// The one-element module over any pair of rings.
    pub fn zero_module(left_ring: &FiniteRing, right_ring: &FiniteRing) -> BimoduleSpec {
        BimoduleSpec {
            order: 1,
            add: vec![0],
            left: vec![0; left_ring.order()],
            right: vec![0; right_ring.order()],
        }
    }

    /// A sub-bimodule of the regular bimodule supported on a subset of the
    /// ring (used e.g. for 2Z4 inside Z4). `members` must be closed under
    /// addition and both actions; the module's own indices follow the sorted
    /// member order.
    pub fn submodule_of_regular(
        r: &FiniteRing,
        members: &ElemSet,
    ) -> Result<BimoduleSpec, ConstructError> {
        let emb: Vec<usize> = members.to_vec();
        let mut back = vec![usize::MAX; r.order()];
        for (i, &e) in emb.iter().enumerate() {
            back[e] = i;
        }
        let class = |x: usize| -> Result<usize, ConstructError> {
            if back[x] == usize::MAX {
                Err(ConstructError::NotClosed(vec![x]))
            } else {
                Ok(back[x])
            }
        };
        let k = emb.len();
        let mut add = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                add[i * k + j] = class(r.add(emb[i], emb[j]))?;
            }
        }
        let n = r.order();
        let mut left = vec![0; n * k];
        let mut right = vec![0; k * n];
        for a in 0..n {
            for (i, &m) in emb.iter().enumerate() {
                left[a * k + i] = class(r.mul(a, m))?;
                right[i * n + a] = class(r.mul(m, a))?;
            }
        }
        Ok(BimoduleSpec {
            order: k,
            add,
            left,
            right,
        })
    }

    /// Checks the abelian-group and bimodule axioms against the two rings.
    pub fn validate(
        &self,
        left_ring: &FiniteRing,
        right_ring: &FiniteRing,
    ) -> Result<(), ConstructError> {
        let k = self.order;
        let fail = |axiom: &'static str, witness: Vec<usize>| {
            Err(ConstructError::BimoduleAxiom { axiom, witness })
        };
        if self.add.len() != k * k
            || self.left.len() != left_ring.order() * k
            || self.right.len() != k * right_ring.order()
            || self.add.iter().any(|&v| v >= k)
            || self.left.iter().any(|&v| v >= k)
            || self.right.iter().any(|&v| v >= k)
        {
            return fail("table-shape", vec![]);
        }
        for a in 0..k {
            if self.add_of(0, a) != a {
                return fail("zero-identity", vec![a]);
            }
            if (0..k).all(|b| self.add_of(a, b) != 0) {
                return fail("negatives", vec![a]);
            }
            for b in 0..k {
                if self.add_of(a, b) != self.add_of(b, a) {
                    return fail("add-commutative", vec![a, b]);
                }
                for c in 0..k {
                    if self.add_of(self.add_of(a, b), c) != self.add_of(a, self.add_of(b, c)) {
                        return fail("add-associative", vec![a, b, c]);
                    }
                }
            }
        }
        for m in 0..k {
            if self.left_of(left_ring.one(), m) != m {
                return fail("left-unital", vec![m]);
            }
            if self.right_of(m, right_ring.one()) != m {
                return fail("right-unital", vec![m]);
            }
        }
        for r1 in 0..left_ring.order() {
            for m in 0..k {
                for r2 in 0..left_ring.order() {
                    if self.left_of(left_ring.mul(r1, r2), m)
                        != self.left_of(r1, self.left_of(r2, m))
                    {
                        return fail("left-associative", vec![r1, r2, m]);
                    }
                    if self.left_of(left_ring.add(r1, r2), m)
                        != self.add_of(self.left_of(r1, m), self.left_of(r2, m))
                    {
                        return fail("left-additive-in-ring", vec![r1, r2, m]);
                    }
                }
                for m2 in 0..k {
                    if self.left_of(r1, self.add_of(m, m2))
                        != self.add_of(self.left_of(r1, m), self.left_of(r1, m2))
                    {
                        return fail("left-additive-in-module", vec![r1, m, m2]);
                    }
                }
            }
        }
        for s1 in 0..right_ring.order() {
            for m in 0..k {
                for s2 in 0..right_ring.order() {
                    if self.right_of(m, right_ring.mul(s1, s2))
                        != self.right_of(self.right_of(m, s1), s2)
                    {
                        return fail("right-associative", vec![m, s1, s2]);
                    }
                    if self.right_of(m, right_ring.add(s1, s2))
                        != self.add_of(self.right_of(m, s1), self.right_of(m, s2))
                    {
                        return fail("right-additive-in-ring", vec![m, s1, s2]);
                    }
                }
                for m2 in 0..k {
                    if self.right_of(self.add_of(m, m2), s1)
                        != self.add_of(self.right_of(m, s1), self.right_of(m2, s1))
                    {
                        return fail("right-additive-in-module", vec![m, m2, s1]);
                    }
                }
            }
        }
        for r1 in 0..left_ring.order() {
            for m in 0..k {
                for s1 in 0..right_ring.order() {
                    if self.right_of(self.left_of(r1, m), s1)
                        != self.left_of(r1, self.right_of(m, s1))
                    {
                        return fail("actions-commute", vec![r1, m, s1]);
                    }
                }
            }
        }
        Ok(())
    }
}

fn right_width(m: &BimoduleSpec) -> usize {
    m.right.len() / m.order
}

/// A Morita context: rings A and B, a (B,A)-bimodule M, an (A,B)-bimodule N,
/// and pairing tables `psi : N x M -> A`, `phi : M x N -> B`.
#[derive(Clone, Debug)]
pub struct MoritaContextSpec {
    pub ring_a: FiniteRing,
    pub ring_b: FiniteRing,
    pub module_m: BimoduleSpec,
    pub module_n: BimoduleSpec,
    pub psi: Vec<usize>,
    pub phi: Vec<usize>,
}

impl MoritaContextSpec {
    pub fn psi_of(&self, n: usize, m: usize) -> ElementId {
        self.psi[n * self.module_m.order + m]
    }

    pub fn phi_of(&self, m: usize, n: usize) -> ElementId {
        self.phi[m * self.module_n.order + n]
    }

    /// Additive closure of the psi values: a two-sided ideal of A.
    pub fn psi_image(&self) -> ElemSet {
        let mut seed = ElemSet::empty(self.ring_a.order());
        for v in &self.psi {
            seed.insert(*v);
        }
        crate::ideals::additive_closure(&self.ring_a, &seed)
    }

    /// Additive closure of the phi values: a two-sided ideal of B.
    pub fn phi_image(&self) -> ElemSet {
        let mut seed = ElemSet::empty(self.ring_b.order());
        for v in &self.phi {
            seed.insert(*v);
        }
        crate::ideals::additive_closure(&self.ring_b, &seed)
    }

    /// Checks every context axiom: both bimodules, biadditivity and balance
    /// of the pairings, the bimodule-homomorphism laws, and the two
    /// associativity conditions that make the generalized matrices a ring.
    pub fn validate(&self) -> Result<(), ConstructError> {
        // M is a (B, A)-bimodule, N is an (A, B)-bimodule.
        self.module_m.validate(&self.ring_b, &self.ring_a)?;
        self.module_n.validate(&self.ring_a, &self.ring_b)?;
        let (a, b, mm, nn) = (&self.ring_a, &self.ring_b, &self.module_m, &self.module_n);
        let fail = |condition: &'static str, witness: Vec<usize>| {
            Err(ConstructError::MoritaCondition { condition, witness })
        };
        if self.psi.len() != nn.order * mm.order || self.psi.iter().any(|&v| v >= a.order()) {
            return fail("psi-shape", vec![]);
        }
        if self.phi.len() != mm.order * nn.order || self.phi.iter().any(|&v| v >= b.order()) {
            return fail("phi-shape", vec![]);
        }
        for n1 in 0..nn.order {
            for n2 in 0..nn.order {
                for m in 0..mm.order {
                    if self.psi_of(nn.add_of(n1, n2), m)
                        != a.add(self.psi_of(n1, m), self.psi_of(n2, m))
                    {
                        return fail("psi-additive-left", vec![n1, n2, m]);
                    }
                    if self.phi_of(m, nn.add_of(n1, n2))
                        != b.add(self.phi_of(m, n1), self.phi_of(m, n2))
                    {
                        return fail("phi-additive-right", vec![m, n1, n2]);
                    }
                }
            }
        }
        for m1 in 0..mm.order {
            for m2 in 0..mm.order {
                for n in 0..nn.order {
                    if self.psi_of(n, mm.add_of(m1, m2))
                        != a.add(self.psi_of(n, m1), self.psi_of(n, m2))
                    {
                        return fail("psi-additive-right", vec![n, m1, m2]);
                    }
                    if self.phi_of(mm.add_of(m1, m2), n)
                        != b.add(self.phi_of(m1, n), self.phi_of(m2, n))
                    {
                        return fail("phi-additive-left", vec![m1, m2, n]);
                    }
                }
            }
        }
        // Balance over the middle ring: psi(n.b, m) = psi(n, b.m) and
        // phi(m.a, n) = phi(m, a.n).
        for n in 0..nn.order {
            for m in 0..mm.order {
                for x in 0..b.order() {
                    if self.psi_of(nn.right_of(n, x), m) != self.psi_of(n, mm.left_of(x, m)) {
                        return fail("psi-balanced", vec![n, x, m]);
                    }
                }
                for x in 0..a.order() {
                    if self.phi_of(mm.right_of(m, x), n) != self.phi_of(m, nn.left_of(x, n)) {
                        return fail("phi-balanced", vec![m, x, n]);
                    }
                }
            }
        }
        // Bimodule homomorphism laws.
        for n in 0..nn.order {
            for m in 0..mm.order {
                for x in 0..a.order() {
                    if self.psi_of(nn.left_of(x, n), m) != a.mul(x, self.psi_of(n, m)) {
                        return fail("psi-left-a-linear", vec![x, n, m]);
                    }
                    if self.psi_of(n, mm.right_of(m, x)) != a.mul(self.psi_of(n, m), x) {
                        return fail("psi-right-a-linear", vec![n, m, x]);
                    }
                }
                for x in 0..b.order() {
                    if self.phi_of(mm.left_of(x, m), n) != b.mul(x, self.phi_of(m, n)) {
                        return fail("phi-left-b-linear", vec![x, m, n]);
                    }
                    if self.phi_of(m, nn.right_of(n, x)) != b.mul(self.phi_of(m, n), x) {
                        return fail("phi-right-b-linear", vec![m, n, x]);
                    }
                }
            }
        }
        // Associativity conditions: psi(n, m).n' = n.phi(m, n') and
        // phi(m, n).m' = m.psi(n, m').
        for n in 0..nn.order {
            for m in 0..mm.order {
                for n2 in 0..nn.order {
                    if nn.left_of(self.psi_of(n, m), n2) != nn.right_of(n, self.phi_of(m, n2)) {
                        return fail("associativity-psi", vec![n, m, n2]);
                    }
                }
                for m2 in 0..mm.order {
                    if mm.left_of(self.phi_of(m, n), m2) != mm.right_of(m, self.psi_of(n, m2)) {
                        return fail("associativity-phi", vec![m, n, m2]);
                    }
                }
            }
        }
        Ok(())
    }
}

/// The ring of generalized matrices `[[a, n], [m, b]]` of a validated Morita
/// context, encoded as quadruples `(a, n, m, b)` little-endian:
/// `index = a + n*|A| + m*|A||N| + b*|A||N||M|`.
pub fn morita_ring(
    spec: &MoritaContextSpec,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    spec.validate()?;
    let (a, b, mm, nn) = (&spec.ring_a, &spec.ring_b, &spec.module_m, &spec.module_n);
    let order = cap.admit(
        a.order() as u128 * nn.order as u128 * mm.order as u128 * b.order() as u128,
    )?;
    let radix = Radix::new(vec![a.order(), nn.order, mm.order, b.order()]);
    debug_assert_eq!(radix.order(), order);
    let parts = radix.decode_all();
    let one = radix.encode(&[a.one(), 0, 0, b.one()]);

    let add = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        radix.encode(&[
            a.add(xs[0], ys[0]),
            nn.add_of(xs[1], ys[1]),
            mm.add_of(xs[2], ys[2]),
            b.add(xs[3], ys[3]),
        ])
    };
    let mul = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        let (a1, n1, m1, b1) = (xs[0], xs[1], xs[2], xs[3]);
        let (a2, n2, m2, b2) = (ys[0], ys[1], ys[2], ys[3]);
        radix.encode(&[
            a.add(a.mul(a1, a2), spec.psi_of(n1, m2)),
            nn.add_of(nn.left_of(a1, n2), nn.right_of(n1, b2)),
            mm.add_of(mm.right_of(m1, a2), mm.left_of(b1, m2)),
            b.add(spec.phi_of(m1, n2), b.mul(b1, b2)),
        ])
    };
    Ok(FiniteRing::build_with(order, one, None, add, mul))
}

/// The Morita context `(R, R, R, R, psi(n,m) = s*n*m, phi(m,n) = s*m*n)`
/// whose generalized matrices coincide, entry for entry, with
/// [`generalized_matrix`]. Requires `s` central.
pub fn generalized_matrix_context(
    r: &FiniteRing,
    s: ElementId,
) -> Result<MoritaContextSpec, ConstructError> {
    if !r.center().contains(s) {
        return Err(ConstructError::NotCentral(s));
    }
    let n = r.order();
    let mut psi = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            psi[x * n + y] = r.mul(s, r.mul(x, y));
        }
    }
    Ok(MoritaContextSpec {
        ring_a: r.clone(),
        ring_b: r.clone(),
        module_m: BimoduleSpec::regular(r),
        module_n: BimoduleSpec::regular(r),
        phi: psi.clone(),
        psi,
    })
}

/// The scaled 2x2 matrix ring M_(s)(R): quadruples `(a, b, c, d)` standing
/// for `[[a, b], [c, d]]`, little-endian in base `|R|`, with the cross terms
/// of the product scaled by the central element `s`.
pub fn generalized_matrix(
    r: &FiniteRing,
    s: ElementId,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    if !r.center().contains(s) {
        return Err(ConstructError::NotCentral(s));
    }
    let q = r.order();
    let order = cap.admit((q as u128).pow(4))?;
    let radix = Radix::new(vec![q; 4]);
    let parts = radix.decode_all();
    let one = radix.encode(&[r.one(), 0, 0, r.one()]);
    let add = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        radix.encode(&[
            r.add(xs[0], ys[0]),
            r.add(xs[1], ys[1]),
            r.add(xs[2], ys[2]),
            r.add(xs[3], ys[3]),
        ])
    };
    let mul = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        let (a, b, c, d) = (xs[0], xs[1], xs[2], xs[3]);
        let (a2, b2, c2, d2) = (ys[0], ys[1], ys[2], ys[3]);
        radix.encode(&[
            r.add(r.mul(a, a2), r.mul(s, r.mul(b, c2))),
            r.add(r.mul(a, b2), r.mul(b, d2)),
            r.add(r.mul(c, a2), r.mul(d, c2)),
            r.add(r.mul(s, r.mul(c, b2)), r.mul(d, d2)),
        ])
    };
    Ok(FiniteRing::build_with(order, one, None, add, mul))
}

/// The Morita context over Z4 with M = 2Z4, N = Z4, and both pairings given
/// by multiplication in Z4. Its generalized matrices form a ring of order
/// 4 * 4 * 2 * 4 = 128.
pub fn example_3_9_context() -> MoritaContextSpec {
    let z4 = zmod(4, OrderCap::default()).expect("Z4 fits any cap");
    let members = ElemSet::from_indices(4, [0, 2]);
    let m = BimoduleSpec::submodule_of_regular(&z4, &members)
        .expect("2Z4 is closed under the regular actions");
    let n = BimoduleSpec::regular(&z4);
    // Module m-index i corresponds to the ring element 2i.
    let mut psi = vec![0; 4 * 2];
    for nv in 0..4 {
        for mi in 0..2 {
            psi[nv * 2 + mi] = z4.mul(nv, 2 * mi);
        }
    }
    let mut phi = vec![0; 2 * 4];
    for mi in 0..2 {
        for nv in 0..4 {
            phi[mi * 4 + nv] = z4.mul(2 * mi, nv);
        }
    }
    MoritaContextSpec {
        ring_a: z4.clone(),
        ring_b: z4,
        module_m: m,
        module_n: n,
        psi,
        phi,
    }
}

/// The block Morita context with A = B = R^3 (diagonal 3x3 matrices over R),
/// M the (3,2) corner, N the bottom-left pair of corners, and zero pairings
/// (the matrix products defining them vanish identically).
pub fn example_2_5_context(r: &FiniteRing) -> MoritaContextSpec {
    let q = r.order();
    let diag = Radix::new(vec![q; 3]);
    let dparts = diag.decode_all();
    let ring_a = FiniteRing::build_with(
        diag.order(),
        diag.encode(&[r.one(); 3]),
        None,
        |x, y| {
            let (xs, ys) = (&dparts[x], &dparts[y]);
            diag.encode(&[r.add(xs[0], ys[0]), r.add(xs[1], ys[1]), r.add(xs[2], ys[2])])
        },
        |x, y| {
            let (xs, ys) = (&dparts[x], &dparts[y]);
            diag.encode(&[r.mul(xs[0], ys[0]), r.mul(xs[1], ys[1]), r.mul(xs[2], ys[2])])
        },
    );
    let comp = |x: usize, i: usize| -> usize {
        match i {
            0 => x % q,
            1 => (x / q) % q,
            _ => x / (q * q),
        }
    };
    // M = R at the (3,2) entry: diag(b).m = b_3 m, m.diag(a) = m a_2.
    let module_m = {
        let mut add = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = r.add(a, b);
            }
        }
        let mut left = vec![0; ring_a.order() * q];
        let mut right = vec![0; q * ring_a.order()];
        for x in 0..ring_a.order() {
            for m in 0..q {
                left[x * q + m] = r.mul(comp(x, 2), m);
                right[m * ring_a.order() + x] = r.mul(m, comp(x, 1));
            }
        }
        BimoduleSpec {
            order: q,
            add,
            left,
            right,
        }
    };
    // N = R^2 at the (3,1) and (3,2) entries: diag(a).n = a_3 (n1, n2),
    // n.diag(b) = (n1 b_1, n2 b_2).
    let module_n = {
        let pair = Radix::new(vec![q; 2]);
        let pparts = pair.decode_all();
        let k = pair.order();
        let mut add = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                let (xs, ys) = (&pparts[x], &pparts[y]);
                add[x * k + y] = pair.encode(&[r.add(xs[0], ys[0]), r.add(xs[1], ys[1])]);
            }
        }
        let mut left = vec![0; ring_a.order() * k];
        let mut right = vec![0; k * ring_a.order()];
        for x in 0..ring_a.order() {
            for nv in 0..k {
                let np = &pparts[nv];
                left[x * k + nv] =
                    pair.encode(&[r.mul(comp(x, 2), np[0]), r.mul(comp(x, 2), np[1])]);
                right[nv * ring_a.order() + x] =
                    pair.encode(&[r.mul(np[0], comp(x, 0)), r.mul(np[1], comp(x, 1))]);
            }
        }
        BimoduleSpec {
            order: k,
            add,
            left,
            right,
        }
    };
    let psi = vec![0; module_n.order * module_m.order];
    let phi = vec![0; module_m.order * module_n.order];
    MoritaContextSpec {
        ring_a: ring_a.clone(),
        ring_b: ring_a,
        module_m,
        module_n,
        psi,
        phi,
    }
}

/// The trivial extension T(R, M): pairs `(r, m)` with
/// `(r1, m1)(r2, m2) = (r1 r2, r1.m2 + m1.r2)`, encoded `index = r + m*|R|`.
pub fn trivial_extension(
    r: &FiniteRing,
    m: &BimoduleSpec,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    m.validate(r, r)?;
    let order = cap.admit(r.order() as u128 * m.order as u128)?;
    let q = r.order();
    let one = r.one(); // (1, 0)
    let add = |x: usize, y: usize| {
        let (r1, m1) = (x % q, x / q);
        let (r2, m2) = (y % q, y / q);
        r.add(r1, r2) + m.add_of(m1, m2) * q
    };
    let mul = |x: usize, y: usize| {
        let (r1, m1) = (x % q, x / q);
        let (r2, m2) = (y % q, y / q);
        r.mul(r1, r2) + m.add_of(m.left_of(r1, m2), m.right_of(m1, r2)) * q
    };
    Ok(FiniteRing::build_with(order, one, None, add, mul))
}
