//! Truncated skew power series rings R[[x; alpha]]/(x^n).

use super::{ConstructError, OrderCap, Radix, RingEndomorphism};
use crate::ring::FiniteRing;

/// Coefficient tuples `(r_0, ..., r_{n-1})` with `r_0` as the low digit, so
/// the base ring occupies indices `0..|R|` and `x` itself is index `|R|`.
/// Multiplication commutes `x` past coefficients via `x * r = alpha(r) * x`:
/// `c_k = sum_{i+j=k} r_i * alpha^i(s_j)`, truncated at degree `n`.
pub fn truncated_skew_power_series(
    r: &FiniteRing,
    alpha: &RingEndomorphism,
    n: usize,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    assert!(n >= 1, "truncation degree must be positive");
    alpha.check_against(r)?;
    let order = cap.admit((r.order() as u128).pow(n as u32))?;
    let twists: Vec<RingEndomorphism> = (0..n).map(|t| alpha.power(t)).collect();
    let radix = Radix::new(vec![r.order(); n]);
    debug_assert_eq!(radix.order(), order);
    let parts = radix.decode_all();

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
        let mut out = vec![0usize; n];
        for i in 0..n {
            if xs[i] == 0 {
                continue;
            }
            for j in 0..(n - i) {
                let term = r.mul(xs[i], twists[i].apply(ys[j]));
                out[i + j] = r.add(out[i + j], term);
            }
        }
        radix.encode(&out)
    };
    Ok(FiniteRing::build_with(order, r.one(), None, add, mul))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{frobenius, galois_field, zmod};
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
    fn z2_dual_numbers() {
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let id = RingEndomorphism::identity(&z2);
        let s = truncated_skew_power_series(&z2, &id, 2, OrderCap::default()).unwrap();
        full_scan(&s);
        assert_eq!(s.order(), 4);
        let x = 2; // tuple (0, 1)
        assert_eq!(s.mul(x, x), 0, "x^2 = 0 after truncation");
    }

    #[test]
    fn degree_one_truncation_is_base_ring() {
        let z6 = zmod(6, OrderCap::default()).unwrap();
        let id = RingEndomorphism::identity(&z6);
        let s = truncated_skew_power_series(&z6, &id, 1, OrderCap::default()).unwrap();
        assert_eq!(s.mul_table(), z6.mul_table());
        assert_eq!(s.add_table(), z6.add_table());
    }

    #[test]
    fn frobenius_twist_moves_coefficients() {
        let f = galois_field(2, 2, None, OrderCap::default()).unwrap();
        let fr = frobenius(&f).unwrap();
        let s = truncated_skew_power_series(&f, &fr, 2, OrderCap::default()).unwrap();
        full_scan(&s);
        assert_eq!(s.order(), 16);
        let x = f.order(); // tuple (0, 1)
        for a in f.elements() {
            // x * a = a^2 * x: the base ring embeds as the low digits.
            let xa = s.mul(x, a);
            let a2x = s.mul(f.mul(a, a), x);
            assert_eq!(xa, a2x, "twist identity fails at base element {a}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let z6 = zmod(6, OrderCap::default()).unwrap();
        let id = RingEndomorphism::identity(&z6);
        assert!(truncated_skew_power_series(&z6, &id, 4, OrderCap::default()).is_err());
    }
}
