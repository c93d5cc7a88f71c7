//! Galois fields from explicit polynomial arithmetic, plus the Frobenius
//! endomorphism used to twist the triangular and power-series constructors.

use super::{ConstructError, OrderCap, RingEndomorphism};
use crate::ring::FiniteRing;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over Z_p as little-endian coefficient vectors with no
/// trailing zeros (the zero polynomial is the empty vector).
fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo monic `m` over Z_p.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r: Vec<u64> = a.to_vec();
    let deg_m = m.len() - 1;
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        for (i, &c) in m.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + p - (lead * c) % p) % p;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Exhaustive factor check: no monic divisor of degree 1..=deg/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=(deg / 2) {
        let count = (p as u128).pow(d as u32) as u64;
        for m in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = m;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The least irreducible monic polynomial of degree `k` over Z_p, ordered by
/// the integer encoding of its non-leading coefficients.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = (p as u128).pow(k);
    for m in 0..count {
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut v = m;
        for _ in 0..k {
            f.push((v % p as u128) as u64);
            v /= p as u128;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over Z_p")
}

fn coeff_label(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// The field GF(p^k). Elements are polynomial residues in little-endian
/// base-p digits: `index = sum a_i * p^i`, so the prime subfield occupies
/// indices `0..p` and `x` sits at index `p`.
///
/// `poly`, when given, must be the full monic coefficient vector
/// `[c_0, ..., c_{k-1}, 1]` of an irreducible polynomial; otherwise the
/// least irreducible monic polynomial (by coefficient encoding) is used.
pub fn galois_field(
    p: u64,
    k: u32,
    poly: Option<&[u64]>,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    if !is_prime(p) {
        return Err(ConstructError::NotPrime(p));
    }
    assert!(k >= 1, "extension degree must be at least 1");
    let order = cap.admit((p as u128).pow(k))?;

    let modulus: Vec<u64> = match poly {
        Some(c) => {
            let ok = c.len() == k as usize + 1
                && *c.last().unwrap() == 1
                && c.iter().all(|&v| v < p)
                && is_irreducible(c, p);
            if !ok {
                return Err(ConstructError::BadPolynomial(c.to_vec()));
            }
            c.to_vec()
        }
        None => least_irreducible(p, k),
    };

    let decode = |idx: usize| -> Vec<u64> {
        let mut v = idx as u64;
        let mut out = Vec::with_capacity(k as usize);
        for _ in 0..k {
            out.push(v % p);
            v /= p;
        }
        out
    };
    let encode = |coeffs: &[u64]| -> usize {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = acc * p + c;
        }
        acc as usize
    };

    let labels = (0..order).map(|i| coeff_label(&decode(i))).collect();
    Ok(FiniteRing::build_with(
        order,
        1,
        Some(labels),
        |a, b| {
            let (xs, ys) = (decode(a), decode(b));
            let sum: Vec<u64> = xs.iter().zip(&ys).map(|(&x, &y)| (x + y) % p).collect();
            encode(&sum)
        },
        |a, b| {
            let prod = poly_mul(&trim(decode(a)), &trim(decode(b)), p);
            let mut rem = poly_rem(&prod, &modulus, p);
            rem.resize(k as usize, 0);
            encode(&rem)
        },
    ))
}

/// The map `a -> a^p` on a finite field of characteristic p. The
/// characteristic is recovered as the additive order of 1, and field-ness is
/// verified (commutative, every nonzero element a unit) before the map is
/// checked as an endomorphism.
pub fn frobenius(f: &FiniteRing) -> Result<RingEndomorphism, ConstructError> {
    let mut char_p = 1u64;
    let mut acc = f.one();
    while acc != f.zero() {
        acc = f.add(acc, f.one());
        char_p += 1;
        if char_p > f.order() as u64 {
            return Err(ConstructError::NotAField);
        }
    }
    if !is_prime(char_p) || !f.is_commutative() {
        return Err(ConstructError::NotAField);
    }
    if f.elements().skip(1).any(|a| !f.is_unit(a)) {
        return Err(ConstructError::NotAField);
    }
    let map: Vec<usize> = f.elements().map(|a| f.pow(a, char_p as usize)).collect();
    RingEndomorphism::new(f, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::zmod;
    use crate::ring::{validate_ring, RawRing};

    fn full_scan(r: &FiniteRing) {
        validate_ring(&RawRing {
            order: r.order(),
            add: r.add_table(),
            mul: r.mul_table(),
            one: r.one(),
            labels: None,
        })
        .expect("field failed the axiom scan");
    }

    #[test]
    fn gf2_is_z2() {
        let f = galois_field(2, 1, None, OrderCap::default()).unwrap();
        let z2 = zmod(2, OrderCap::default()).unwrap();
        assert_eq!(f.add_table(), z2.add_table());
        assert_eq!(f.mul_table(), z2.mul_table());
    }

    #[test]
    fn gf4_from_default_polynomial() {
        let f = galois_field(2, 2, None, OrderCap::default()).unwrap();
        full_scan(&f);
        assert_eq!(f.order(), 4);
        // Every element of GF(4) satisfies a^4 = a.
        for a in f.elements() {
            assert_eq!(f.pow(a, 4), a);
        }
        assert_eq!(f.units().len(), 3);
    }

    #[test]
    fn gf4_rejects_reducible_polynomial() {
        // x^2 + 1 = (x+1)^2 over Z2.
        let err = galois_field(2, 2, Some(&[1, 0, 1]), OrderCap::default()).unwrap_err();
        assert!(matches!(err, ConstructError::BadPolynomial(_)));
        // x^2 + x + 1 is fine.
        assert!(galois_field(2, 2, Some(&[1, 1, 1]), OrderCap::default()).is_ok());
    }

    #[test]
    fn gf9_field_axioms() {
        let f = galois_field(3, 2, None, OrderCap::default()).unwrap();
        full_scan(&f);
        assert_eq!(f.order(), 9);
        for a in f.elements() {
            assert_eq!(f.pow(a, 9), a);
        }
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(
            galois_field(4, 1, None, OrderCap::default()),
            Err(ConstructError::NotPrime(4))
        ));
    }

    #[test]
    fn frobenius_on_gf4_has_order_two() {
        let f = galois_field(2, 2, None, OrderCap::default()).unwrap();
        let fr = frobenius(&f).unwrap();
        let id = RingEndomorphism::identity(&f);
        assert_ne!(fr.map(), id.map());
        assert_eq!(fr.power(2).map(), id.map());
    }

    #[test]
    fn frobenius_on_prime_field_is_identity() {
        let z5 = zmod(5, OrderCap::default()).unwrap();
        let fr = frobenius(&z5).unwrap();
        assert_eq!(fr.map(), RingEndomorphism::identity(&z5).map());
    }

    #[test]
    fn frobenius_rejects_non_fields() {
        let z4 = zmod(4, OrderCap::default()).unwrap();
        assert!(matches!(frobenius(&z4), Err(ConstructError::NotAField)));
    }

    #[test]
    fn labels_render_polynomials() {
        let f = galois_field(2, 2, None, OrderCap::default()).unwrap();
        let labels = f.labels().unwrap();
        assert_eq!(labels[0], "0");
        assert_eq!(labels[1], "1");
        assert_eq!(labels[2], "x");
        assert_eq!(labels[3], "x+1");
    }
}
