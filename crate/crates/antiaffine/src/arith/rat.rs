//! Arbitrary-precision rationals: reduced fractions with positive denominator.

use super::field::Field;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational number. `BigRational` maintains the reduced-form invariant
/// (coprime numerator/denominator, denominator > 0).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }

    fn one_like(&self) -> Self {
        Rat::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }

    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rat(self.0.recip()))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn from_i64(&self, n: i64) -> Self {
        Rat::from_int(n)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.0.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        (&rn * &rn == *n && &rd * &rd == *d).then(|| Rat(BigRational::new(rn, rd)))
    }

    fn clear_denominators(coeffs: &mut [Self]) {
        let mut l = BigInt::one();
        for c in coeffs.iter() {
            l = l.lcm(c.denom());
        }
        if l.is_one() {
            return;
        }
        let scale = Rat::from_bigint(l);
        for c in coeffs.iter_mut() {
            *c = c.mul(&scale);
        }
    }

    /// Rational root theorem on the denominator-cleared polynomial.
    fn poly_roots(coeffs: &[Self]) -> Result<Vec<Self>> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        let mut cs = coeffs.to_vec();
        Self::clear_denominators(&mut cs);
        while cs.last().map_or(false, |c| c.is_zero()) {
            cs.pop();
        }
        let mut roots = Vec::new();
        // Strip x^k: zero is a root.
        let shift = cs.iter().position(|c| !c.is_zero()).unwrap();
        if shift > 0 {
            roots.push(Rat::zero());
            cs.drain(..shift);
        }
        if cs.len() <= 1 {
            roots.sort();
            return Ok(roots);
        }
        let eval = |x: &Rat| -> Rat {
            let mut acc = Rat::zero();
            for c in cs.iter().rev() {
                acc = acc.mul(x).add(c);
            }
            acc
        };
        let small = |n: &BigInt| -> Result<u64> {
            u64::try_from(n.abs()).map_err(|_| {
                Error::GuardExceeded("rational root search on huge coefficients".into())
            })
        };
        let a0 = small(cs[0].numer())?;
        let an = small(cs.last().unwrap().numer())?;
        if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
            return Err(Error::GuardExceeded(
                "rational root search on huge coefficients".into(),
            ));
        }
        for p in crate::arith::ints::divisors(a0) {
            for q in crate::arith::ints::divisors(an) {
                if crate::arith::ints::gcd_u64(p, q) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rat::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q))
                        .unwrap();
                    if eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}
