//! Upper triangular matrix rings, optionally twisted by an endomorphism,
//! and the two bespoke triangular algebras the test catalog needs.

use super::{galois_field, ConstructError, OrderCap, Radix, RingEndomorphism};
use crate::ring::FiniteRing;

/// Positions `(i, j)` with `i <= j < n`, row-major. The element encoding
/// lists entries in this order, little-endian in base `|R|`.
fn upper_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            out.push((i, j));
        }
    }
    out
}

/// The twisted upper triangular ring: products use
/// `c_ij = sum_{k=i..j} a_ik * alpha^(k-i)(b_kj)`. With the identity twist
/// this is the ordinary upper triangular matrix ring.
pub fn triangular_matrix_ring(
    r: &FiniteRing,
    alpha: &RingEndomorphism,
    n: usize,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    assert!(n >= 1, "matrix dimension must be positive");
    alpha.check_against(r)?;
    let entries = n * (n + 1) / 2;
    let order = cap.admit((r.order() as u128).pow(entries as u32))?;

    let positions = upper_positions(n);
    let mut slot = vec![usize::MAX; n * n];
    for (t, &(i, j)) in positions.iter().enumerate() {
        slot[i * n + j] = t;
    }
    // alpha^t for t = 0..n-1, as plain element maps.
    let twists: Vec<RingEndomorphism> = (0..n).map(|t| alpha.power(t)).collect();

    let radix = Radix::new(vec![r.order(); entries]);
    debug_assert_eq!(radix.order(), order);
    let parts = radix.decode_all();

    let mut one_parts = vec![0usize; entries];
    for i in 0..n {
        one_parts[slot[i * n + i]] = r.one();
    }
    let one = radix.encode(&one_parts);

    let add = |x: usize, y: usize| {
        let sum: Vec<usize> = parts[x]
            .iter()
            .zip(&parts[y])
            .map(|(&a, &b)| r.add(a, b))
            .collect();
        radix.encode(&sum)
    };
    let mul = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        let mut out = vec![0usize; entries];
        for (t, &(i, j)) in positions.iter().enumerate() {
            let mut acc = 0usize;
            for k in i..=j {
                let a_ik = xs[slot[i * n + k]];
                let b_kj = ys[slot[k * n + j]];
                acc = r.add(acc, r.mul(a_ik, twists[k - i].apply(b_kj)));
            }
            out[t] = acc;
        }
        radix.encode(&out)
    };
    Ok(FiniteRing::build_with(order, one, None, add, mul))
}

/// The order-2^(1 + n(n-1)/2) algebra of n x n upper triangular matrices
/// over Z2 with constant diagonal. Components are `(a, u_01, u_02, ...)`
/// with the shared diagonal entry `a` as the low bit and the strictly upper
/// entries following in row-major order.
pub fn example_3_6_block(n: usize, cap: OrderCap) -> Result<FiniteRing, ConstructError> {
    if !(3..=4).contains(&n) {
        return Err(ConstructError::BadBlockSize(n));
    }
    let strict: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                v.push((i, j));
            }
        }
        v
    };
    let comps = 1 + strict.len();
    let order = cap.admit(1u128 << comps)?;
    let mut slot = vec![usize::MAX; n * n];
    for (t, &(i, j)) in strict.iter().enumerate() {
        slot[i * n + j] = 1 + t;
    }
    let radix = Radix::new(vec![2; comps]);
    let parts = radix.decode_all();

    let add = |x: usize, y: usize| x ^ y; // componentwise over Z2
    let mul = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        let (ax, ay) = (xs[0], ys[0]);
        let mut out = vec![0usize; comps];
        out[0] = ax & ay;
        for (t, &(i, j)) in strict.iter().enumerate() {
            // (aI + U)(bI + V) has strict part aV + bU + UV.
            let mut acc = (ax & ys[1 + t]) ^ (ay & xs[1 + t]);
            for k in (i + 1)..j {
                acc ^= xs[slot[i * n + k]] & ys[slot[k * n + j]];
            }
            out[1 + t] = acc;
        }
        radix.encode(&out)
    };
    Ok(FiniteRing::build_with(order, 1, None, add, mul))
}

/// The 64-element algebra of matrices `[[x, y, z], [0, x^2, 0], [0, 0, x]]`
/// over GF(4), encoded as triples `(x, y, z)` little-endian in base 4.
/// Closed-form product: `(x, y, z) * (x', y', z') =
/// (x x', x y' + y x'^2, x z' + z x')`.
pub fn seven_like_gf4(cap: OrderCap) -> Result<FiniteRing, ConstructError> {
    let f = galois_field(2, 2, None, OrderCap::default())?;
    let order = cap.admit(64)?;
    let radix = Radix::new(vec![4, 4, 4]);
    let parts = radix.decode_all();
    let one = radix.encode(&[f.one(), 0, 0]);
    let add = |a: usize, b: usize| {
        let (xs, ys) = (&parts[a], &parts[b]);
        radix.encode(&[
            f.add(xs[0], ys[0]),
            f.add(xs[1], ys[1]),
            f.add(xs[2], ys[2]),
        ])
    };
    let mul = |a: usize, b: usize| {
        let (xs, ys) = (&parts[a], &parts[b]);
        let (x, y, z) = (xs[0], xs[1], xs[2]);
        let (x2, y2, z2) = (ys[0], ys[1], ys[2]);
        radix.encode(&[
            f.mul(x, x2),
            f.add(f.mul(x, y2), f.mul(y, f.mul(x2, x2))),
            f.add(f.mul(x, z2), f.mul(z, x2)),
        ])
    };
    Ok(FiniteRing::build_with(order, one, None, add, mul))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix_ring, zmod};
    use crate::ring::{validate_ring, RawRing};

    fn full_scan(r: &FiniteRing) {
        validate_ring(&RawRing {
            order: r.order(),
            add: r.add_table(),
            mul: r.mul_table(),
            one: r.one(),
            labels: None,
        })
        .expect("constructor output failed the axiom scan");
    }

    #[test]
    fn t2_z3_has_order_27() {
        let z3 = zmod(3, OrderCap::default()).unwrap();
        let id = RingEndomorphism::identity(&z3);
        let t = triangular_matrix_ring(&z3, &id, 2, OrderCap::default()).unwrap();
        full_scan(&t);
        assert_eq!(t.order(), 27);
        // Units: invertible diagonal (2 choices each), free corner: 2*2*3.
        assert_eq!(t.units().len(), 12);
        // Center: the scalar matrices a*I.
        assert_eq!(t.center().len(), 3);
    }

    #[test]
    fn n_equals_one_is_base_ring() {
        let z5 = zmod(5, OrderCap::default()).unwrap();
        let id = RingEndomorphism::identity(&z5);
        let t = triangular_matrix_ring(&z5, &id, 1, OrderCap::default()).unwrap();
        assert_eq!(t.mul_table(), z5.mul_table());
    }

    #[test]
    fn untwisted_product_matches_matrix_ring() {
        // Embed T2(Z2) into M2(Z2) and compare products pairwise.
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let id = RingEndomorphism::identity(&z2);
        let t = triangular_matrix_ring(&z2, &id, 2, OrderCap::default()).unwrap();
        let m = matrix_ring(&z2, 2, OrderCap::default()).unwrap();
        // T2 components (a11, a12, a22) -> M2 components (a11, a12, 0, a22).
        let embed = |x: usize| -> usize {
            let (a11, a12, a22) = (x % 2, (x / 2) % 2, x / 4);
            a11 + 2 * a12 + 8 * a22
        };
        for x in t.elements() {
            for y in t.elements() {
                assert_eq!(embed(t.mul(x, y)), m.mul(embed(x), embed(y)));
                assert_eq!(embed(t.add(x, y)), m.add(embed(x), embed(y)));
            }
        }
    }

    #[test]
    fn frobenius_twist_changes_the_product() {
        let f = galois_field(2, 2, None, OrderCap::default()).unwrap();
        let fr = frobenius_of(&f);
        let id = RingEndomorphism::identity(&f);
        let twisted = triangular_matrix_ring(&f, &fr, 2, OrderCap::default()).unwrap();
        let plain = triangular_matrix_ring(&f, &id, 2, OrderCap::default()).unwrap();
        full_scan(&twisted);
        assert_eq!(twisted.order(), 64);
        assert_ne!(twisted.mul_table(), plain.mul_table());
        // Twist acts on the corner: diag(x, 0) * e12-ish products differ on
        // some witness pair; locate one explicitly.
        let mut witness = None;
        'outer: for x in twisted.elements() {
            for y in twisted.elements() {
                if twisted.mul(x, y) != plain.mul(x, y) {
                    witness = Some((x, y));
                    break 'outer;
                }
            }
        }
        assert!(witness.is_some());
    }

    fn frobenius_of(f: &FiniteRing) -> RingEndomorphism {
        super::super::frobenius(f).unwrap()
    }

    #[test]
    fn block_r3_and_r4_orders() {
        let r3 = example_3_6_block(3, OrderCap::default()).unwrap();
        full_scan(&r3);
        assert_eq!(r3.order(), 16);
        let r4 = example_3_6_block(4, OrderCap::default()).unwrap();
        full_scan(&r4);
        assert_eq!(r4.order(), 128);
        assert!(example_3_6_block(5, OrderCap::default()).is_err());
    }

    #[test]
    fn block_squares_have_scalar_diagonal() {
        let r4 = example_3_6_block(4, OrderCap::default()).unwrap();
        for x in r4.elements() {
            let sq = r4.mul(x, x);
            // Diagonal of the square is a^2 = a over Z2.
            assert_eq!(sq % 2, x % 2);
        }
    }

    #[test]
    fn seven_like_ring_satisfies_a7() {
        let g = seven_like_gf4(OrderCap::default()).unwrap();
        full_scan(&g);
        assert_eq!(g.order(), 64);
        for a in g.elements() {
            let a7 = g.pow(a, 7);
            let a2 = g.pow(a, 2);
            assert!(
                a7 == a || (a7 == g.zero() && a2 == g.zero()),
                "element {a}: a^7 = {a7}, a^2 = {a2}"
            );
        }
    }

    #[test]
    fn seven_like_ring_not_commutative() {
        let g = seven_like_gf4(OrderCap::default()).unwrap();
        assert!(!g.is_commutative());
    }
}
