//! Truncated power series over an exact field.
//!
//! A series is a `Vec<K>` of the first `prec` coefficients. These helpers back
//! the local expansions of curve functions at a point; precision is always
//! chosen by the caller from an a-priori order bound, so no adaptive lifting
//! is needed.

use super::field::Field;
use super::poly::Poly;

pub fn truncate<K: Field>(mut v: Vec<K>, ctx: &K, prec: usize) -> Vec<K> {
    v.truncate(prec);
    while v.len() < prec {
        v.push(ctx.zero_like());
    }
    v
}

pub fn add<K: Field>(a: &[K], b: &[K], ctx: &K, prec: usize) -> Vec<K> {
    (0..prec)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => ctx.zero_like(),
        })
        .collect()
}

pub fn sub<K: Field>(a: &[K], b: &[K], ctx: &K, prec: usize) -> Vec<K> {
    let nb: Vec<K> = b.iter().map(|c| c.neg()).collect();
    add(a, &nb, ctx, prec)
}

pub fn mul<K: Field>(a: &[K], b: &[K], ctx: &K, prec: usize) -> Vec<K> {
    let mut out = vec![ctx.zero_like(); prec];
    for (i, x) in a.iter().enumerate().take(prec) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= prec {
                break;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

pub fn scale<K: Field>(a: &[K], c: &K) -> Vec<K> {
    a.iter().map(|x| x.mul(c)).collect()
}

/// Inverse of a unit series (constant term nonzero).
pub fn inv<K: Field>(a: &[K], ctx: &K, prec: usize) -> Option<Vec<K>> {
    let a0 = a.first().filter(|c| !c.is_zero())?;
    let a0_inv = a0.inv()?;
    let mut out = vec![ctx.zero_like(); prec];
    out[0] = a0_inv.clone();
    for k in 1..prec {
        let mut s = ctx.zero_like();
        for i in 1..=k {
            if let Some(ai) = a.get(i) {
                s = s.add(&ai.mul(&out[k - i]));
            }
        }
        out[k] = s.neg().mul(&a0_inv);
    }
    Some(out)
}

/// Evaluate a polynomial at a series argument (Horner over series).
pub fn poly_at<K: Field>(p: &Poly<K>, s: &[K], ctx: &K, prec: usize) -> Vec<K> {
    let mut acc = vec![ctx.zero_like(); prec];
    for c in p.coeffs().iter().rev() {
        acc = mul(&acc, s, ctx, prec);
        if !c.is_zero() {
            acc[0] = acc[0].add(c);
        }
    }
    acc
}

/// Square root of a series with prescribed constant-term root `y0`
/// (`y0^2 = a[0]`, `y0 != 0`); Newton iteration, characteristic != 2.
pub fn sqrt_with<K: Field>(a: &[K], y0: &K, ctx: &K, prec: usize) -> Vec<K> {
    let half = ctx.from_i64(2).inv().expect("characteristic 2 excluded");
    let mut y = truncate(vec![y0.clone()], ctx, prec);
    // Each Newton step doubles the number of correct coefficients.
    let mut correct = 1usize;
    while correct < prec {
        let y_inv = inv(&y, ctx, prec).expect("unit constant term");
        let t = mul(a, &y_inv, ctx, prec);
        y = scale(&add(&y, &t, ctx, prec), &half);
        correct *= 2;
    }
    y
}
