//! Baseline constructors: modular rings, direct products, full matrix rings.

use super::{ConstructError, OrderCap, Radix};
use crate::ring::FiniteRing;

/// The ring Z/nZ with element `k` at index `k`. `zmod(1)` is the zero ring.
pub fn zmod(n: usize, cap: OrderCap) -> Result<FiniteRing, ConstructError> {
    let order = cap.admit(n as u128)?;
    let labels = (0..order).map(|i| i.to_string()).collect();
    Ok(FiniteRing::build_with(
        order,
        if order == 1 { 0 } else { 1 },
        Some(labels),
        |a, b| (a + b) % order,
        |a, b| (a * b) % order,
    ))
}

/// Componentwise ring on pairs `(r, s)`, with `r` the low digit:
/// `index = r + |R| * s`.
pub fn direct_product(
    r: &FiniteRing,
    s: &FiniteRing,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    let order = cap.admit(r.order() as u128 * s.order() as u128)?;
    let rn = r.order();
    let one = r.one() + rn * s.one();
    Ok(FiniteRing::build_with(
        order,
        one,
        None,
        |x, y| r.add(x % rn, y % rn) + rn * s.add(x / rn, y / rn),
        |x, y| r.mul(x % rn, y % rn) + rn * s.mul(x / rn, y / rn),
    ))
}

/// Full k x k matrix ring over `r`. Entries are stored row-major,
/// `(m11, m12, ..., mkk)`, little-endian in base `|R|`.
pub fn matrix_ring(
    r: &FiniteRing,
    k: usize,
    cap: OrderCap,
) -> Result<FiniteRing, ConstructError> {
    assert!(k >= 1, "matrix dimension must be positive");
    let order = cap.admit((r.order() as u128).pow((k * k) as u32))?;
    let radix = Radix::new(vec![r.order(); k * k]);
    debug_assert_eq!(radix.order(), order);
    let parts = radix.decode_all();

    let mut one_parts = vec![0usize; k * k];
    for i in 0..k {
        one_parts[i * k + i] = r.one();
    }
    let one = radix.encode(&one_parts);

    let add = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        let sum: Vec<usize> = xs.iter().zip(ys).map(|(&a, &b)| r.add(a, b)).collect();
        radix.encode(&sum)
    };
    let mul = |x: usize, y: usize| {
        let (xs, ys) = (&parts[x], &parts[y]);
        let mut out = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0usize;
                for t in 0..k {
                    acc = r.add(acc, r.mul(xs[i * k + t], ys[t * k + j]));
                }
                out[i * k + j] = acc;
            }
        }
        radix.encode(&out)
    };
    Ok(FiniteRing::build_with(order, one, None, add, mul))
}
