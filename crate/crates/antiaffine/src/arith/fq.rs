//! Prime fields F_p for machine-word odd primes.

use super::field::Field;
use super::ints::is_prime;
use crate::error::{Error, Result};
use std::fmt;

/// Element of F_p, stored as the least non-negative residue together with its
/// modulus. Binary operations panic on a modulus mismatch.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fq {
    value: u64,
    modulus: u64,
}

impl Fq {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus < 3 || !is_prime(modulus) || modulus % 2 == 0 {
            return Err(Error::BadModulus(modulus));
        }
        Ok(Self::reduce(value, modulus))
    }

    /// Caller guarantees `modulus` is an odd prime.
    pub(crate) fn reduce(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let mut v = (value as i128) % m;
        if v < 0 {
            v += m;
        }
        Fq {
            value: v as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(&self, mut e: u64) -> Fq {
        let mut base = *self;
        let mut acc = Fq {
            value: 1,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn check(&self, rhs: &Fq) {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli in F_p arithmetic");
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fq {
    fn zero_like(&self) -> Self {
        Fq {
            value: 0,
            modulus: self.modulus,
        }
    }

    fn one_like(&self) -> Self {
        Fq {
            value: 1,
            modulus: self.modulus,
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value as u128 + rhs.value as u128;
        Fq {
            value: (s % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let p = self.value as u128 * rhs.value as u128;
        Fq {
            value: (p % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        Fq {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^(-1) mod p.
        Some(self.pow(self.modulus - 2))
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn characteristic(&self) -> u64 {
        self.modulus
    }

    fn from_i64(&self, n: i64) -> Self {
        Fq::reduce(n, self.modulus)
    }

    fn sqrt(&self) -> Option<Self> {
        let p = self.modulus;
        if self.value == 0 {
            return Some(*self);
        }
        // Euler criterion.
        if self.pow((p - 1) / 2).value != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        // Tonelli-Shanks for p = 1 mod 4.
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = Fq {
            value: 2,
            modulus: p,
        };
        while z.pow((p - 1) / 2).value == 1 {
            z = z.add(&z.one_like());
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while !t.is_one() {
            let mut i = 0u32;
            let mut tt = t;
            while !tt.is_one() {
                tt = tt.mul(&tt);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b.mul(&b);
            }
            m = i;
            c = b.mul(&b);
            t = t.mul(&c);
            r = r.mul(&b);
        }
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7(v: i64) -> Fq {
        Fq::new(v, 7).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(Fq::new(1, 4).is_err());
        assert!(Fq::new(1, 2).is_err());
        assert!(Fq::new(1, 1).is_err());
        assert!(Fq::new(1, 9).is_err());
        assert!(Fq::new(1, 3).is_ok());
    }

    #[test]
    fn inverses() {
        for v in 1..7 {
            let a = f7(v);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert!(f7(0).inv().is_none());
    }

    #[test]
    fn sqrt_roundtrip() {
        for p in [3u64, 5, 7, 11, 13, 17, 29, 41, 97] {
            let mut squares = 0;
            for v in 0..p {
                let a = Fq::new(v as i64, p).unwrap();
                if let Some(r) = a.sqrt() {
                    assert_eq!(r.mul(&r), a);
                    squares += 1;
                }
            }
            assert_eq!(squares as u64, (p - 1) / 2 + 1);
        }
    }
}
