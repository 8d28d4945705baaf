//! Field abstraction shared by the exact coefficient types.
//!
//! Elements carry enough context to produce the constants of their own field
//! (`zero_like`, `one_like`), so polynomial, series and matrix code can stay
//! generic without threading a separate field handle everywhere.

use crate::error::{Error, Result};
use std::fmt::{Debug, Display};
use std::hash::Hash;

pub trait Field: Clone + PartialEq + Eq + PartialOrd + Ord + Hash + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    /// 0 denotes characteristic zero.
    fn characteristic(&self) -> u64;
    /// Embed a small integer into the field of `self`.
    fn from_i64(&self, n: i64) -> Self;
    /// Exact square root, when one exists in the field.
    fn sqrt(&self) -> Option<Self>;

    fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero field element"))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    /// Rescale a coefficient vector to a denominator-free form. No-op over a
    /// prime field; over the rationals this multiplies by the lcm of the
    /// denominators.
    fn clear_denominators(coeffs: &mut [Self]) {
        let _ = coeffs;
    }

    /// Roots in the field of the polynomial with ascending coefficients
    /// `coeffs` (multiplicity-free, sorted). The default scans a small prime
    /// field; characteristic-zero fields override.
    fn poly_roots(coeffs: &[Self]) -> Result<Vec<Self>> {
        let ctx = coeffs
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        let p = ctx.characteristic();
        if p == 0 || p > (1 << 20) {
            return Err(Error::GuardExceeded(format!(
                "root scan over characteristic {p}"
            )));
        }
        let mut out = Vec::new();
        for v in 0..p {
            let x = ctx.from_i64(v as i64);
            let mut acc = ctx.zero_like();
            for c in coeffs.iter().rev() {
                acc = acc.mul(&x).add(c);
            }
            if acc.is_zero() {
                out.push(x);
            }
        }
        Ok(out)
    }
}
