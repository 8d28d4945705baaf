//! Rational functions on a hyperelliptic curve in split form
//! (a(x) + b(x) y) / d(x), and lazily evaluated products of such functions.
//!
//! Orders and leading coefficients at a point are taken in the canonical
//! local parameters of `curve::local`, so leading coefficients multiply
//! across factors. That lets a product with a removable zero/pole pattern be
//! evaluated exactly without expanding it into a single fraction.

use crate::arith::{Field, Poly};
use crate::curve::{local, CurvePoint, HyperellipticCurve};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrackedFunction<K> {
    a: Poly<K>,
    b: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> TrackedFunction<K> {
    pub fn one(ctx: &K) -> Self {
        TrackedFunction {
            a: Poly::constant(ctx.one_like()),
            b: Poly::zero(),
            den: Poly::constant(ctx.one_like()),
        }
    }

    /// The function d(x).
    pub fn from_poly(d: Poly<K>) -> Self {
        assert!(!d.is_zero(), "zero is not a function");
        let one = d.lc().unwrap().one_like();
        TrackedFunction {
            a: d,
            b: Poly::zero(),
            den: Poly::constant(one),
        }
    }

    /// The function (y - v(x)) / w(x).
    pub fn y_minus_over(v: &Poly<K>, w: Poly<K>, ctx: &K) -> Self {
        assert!(!w.is_zero());
        TrackedFunction {
            a: v.neg(),
            b: Poly::constant(ctx.one_like()),
            den: w,
        }
    }

    /// The function (a(x) + b(x) y) / den(x).
    pub fn with_parts(a: Poly<K>, b: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero());
        assert!(!a.is_zero() || !b.is_zero());
        TrackedFunction { a, b, den }
    }

    pub fn parts(&self) -> (&Poly<K>, &Poly<K>, &Poly<K>) {
        (&self.a, &self.b, &self.den)
    }

    pub fn is_zero_fn(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Product of two functions; y^2 rewrites to f(x) on the curve.
    pub fn mul_on(&self, rhs: &Self, curve: &HyperellipticCurve<K>) -> Self {
        let a = self
            .a
            .mul(&rhs.a)
            .add(&self.b.mul(&rhs.b).mul(curve.f()));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        TrackedFunction {
            a,
            b,
            den: self.den.mul(&rhs.den),
        }
    }

    /// Reciprocal via the conjugate: 1/(a + by) = (a - by)/(a^2 - b^2 f).
    pub fn recip_on(&self, curve: &HyperellipticCurve<K>) -> Self {
        assert!(!self.is_zero_fn(), "reciprocal of the zero function");
        let norm = self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(curve.f()));
        TrackedFunction {
            a: self.a.mul(&self.den),
            b: self.b.neg().mul(&self.den),
            den: norm,
        }
    }

    pub fn div_on(&self, rhs: &Self, curve: &HyperellipticCurve<K>) -> Self {
        self.mul_on(&rhs.recip_on(curve), curve)
    }

    /// Order and leading local coefficient at a point of the curve.
    pub fn ord_lead_at(
        &self,
        curve: &HyperellipticCurve<K>,
        p: &CurvePoint<K>,
    ) -> Result<(i64, K)> {
        let (on, ln) = local::ord_lead_ab(curve, p, &self.a, &self.b)?;
        let (od, ld) = local::ord_lead_ab(curve, p, &self.den, &Poly::zero())?;
        Ok((on - od, ln.div(&ld)))
    }

    pub fn ord_at(&self, curve: &HyperellipticCurve<K>, p: &CurvePoint<K>) -> Result<i64> {
        Ok(self.ord_lead_at(curve, p)?.0)
    }

    /// Exact value at a point where the function has neither zero nor pole.
    pub fn value_at(&self, curve: &HyperellipticCurve<K>, p: &CurvePoint<K>) -> Result<K> {
        let (ord, lead) = self.ord_lead_at(curve, p)?;
        if ord != 0 {
            return Err(Error::ValueUndefined);
        }
        Ok(lead)
    }
}

impl<K: Field> fmt::Display for TrackedFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "({})", self.a)?;
        } else {
            write!(f, "({} + ({})*y)", self.a, self.b)?;
        }
        if !self.den.is_one() {
            write!(f, "/({})", self.den)?;
        }
        Ok(())
    }
}

/// A formal product of tracked functions with integer exponents.
#[derive(Clone, Debug)]
pub struct FunctionProduct<K> {
    factors: Vec<(TrackedFunction<K>, i64)>,
}

impl<K: Field> FunctionProduct<K> {
    pub fn one() -> Self {
        FunctionProduct { factors: Vec::new() }
    }

    pub fn push(&mut self, f: TrackedFunction<K>, e: i64) {
        if e != 0 {
            self.factors.push((f, e));
        }
    }

    pub fn mul_product(&mut self, other: &FunctionProduct<K>) {
        self.factors.extend(other.factors.iter().cloned());
    }

    pub fn mul_inverse(&mut self, other: &FunctionProduct<K>) {
        self.factors
            .extend(other.factors.iter().map(|(f, e)| (f.clone(), -e)));
    }

    pub fn factors(&self) -> &[(TrackedFunction<K>, i64)] {
        &self.factors
    }

    pub fn ord_at(&self, curve: &HyperellipticCurve<K>, p: &CurvePoint<K>) -> Result<i64> {
        let mut ord = 0i64;
        for (f, e) in &self.factors {
            ord += e * f.ord_at(curve, p)?;
        }
        Ok(ord)
    }

    /// Exact value at a point of total order zero; leading coefficients of
    /// the factors multiply even when individual factors vanish there.
    pub fn value_at(&self, curve: &HyperellipticCurve<K>, p: &CurvePoint<K>) -> Result<K> {
        let ctx = curve.ctx();
        let mut ord = 0i64;
        let mut val = ctx.one_like();
        for (f, e) in &self.factors {
            let (o, lead) = f.ord_lead_at(curve, p)?;
            ord += e * o;
            let lead = if *e < 0 {
                lead.inv().ok_or(Error::ValueUndefined)?
            } else {
                lead
            };
            for _ in 0..e.unsigned_abs() {
                val = val.mul(&lead);
            }
        }
        if ord != 0 {
            return Err(Error::ValueUndefined);
        }
        Ok(val)
    }

    /// Multiply the product out into a single split fraction.
    pub fn flatten(&self, curve: &HyperellipticCurve<K>) -> TrackedFunction<K> {
        let mut out = TrackedFunction::one(curve.ctx());
        for (f, e) in &self.factors {
            let base = if *e < 0 { f.recip_on(curve) } else { f.clone() };
            for _ in 0..e.unsigned_abs() {
                out = out.mul_on(&base, curve);
            }
        }
        out
    }
}
