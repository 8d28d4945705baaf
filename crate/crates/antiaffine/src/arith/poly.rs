//! Univariate polynomials over an exact field.
//!
//! Coefficients are stored in ascending degree with trailing zeros stripped;
//! the zero polynomial is the empty vector.

use super::field::Field;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: K) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: K, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The polynomial `x - a`.
    pub fn x_minus(a: &K) -> Self {
        Poly::from_coeffs(vec![a.neg(), a.one_like()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&K> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the convention deg 0 = -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &K) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        if e == 0 {
            let one = self
                .coeffs
                .first()
                .map(|c| c.one_like())
                .expect("pow of zero polynomial needs context");
            return Poly::constant(one);
        }
        let mut base = self.clone();
        let mut acc: Option<Poly<K>> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap()
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.deg() < b.deg() {
            return Ok((Poly::zero(), self.clone()));
        }
        let lc_inv = b.lc().unwrap().inv().expect("leading coefficient is a unit");
        let mut rem = self.coeffs.clone();
        let db = b.coeffs.len() - 1;
        let mut quot = vec![lc_inv.zero_like(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&lc_inv);
            quot[i - db] = q.clone();
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[i - db + j] = rem[i - db + j].sub(&q.mul(bc));
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.divmod(b)?.1)
    }

    /// Division known to be exact; errors when a remainder is left.
    pub fn div_exact(&self, b: &Self) -> Result<Self> {
        let (q, r) = self.divmod(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Poly::zero(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.mul_scalar(&c.inv().expect("leading coefficient is a unit")),
        }
    }

    /// Monic gcd (zero for gcd(0, 0)). Inputs are rescaled to denominator-free
    /// form first; each remainder is normalized monic to control coefficient
    /// growth over Q.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        K::clear_denominators(&mut a.coeffs);
        K::clear_denominators(&mut b.coeffs);
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").monic();
            a = b;
            b = r;
        }
        a
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g` and `g`
    /// monic (or zero).
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let ctx = self
            .coeffs
            .first()
            .or_else(|| other.coeffs.first())
            .cloned();
        let one = match ctx {
            Some(c) => c.one_like(),
            // xgcd(0, 0): any field will do, but there is no context; the
            // callers always pass at least one nonzero operand.
            None => panic!("xgcd of two zero polynomials"),
        };
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::constant(one.clone());
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::constant(one);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(lc) = r0.lc() {
            let inv = lc.inv().expect("leading coefficient is a unit");
            return (r0.mul_scalar(&inv), s0.mul_scalar(&inv), t0.mul_scalar(&inv));
        }
        (r0, s0, t0)
    }

    /// Interpolating polynomial through points with pairwise distinct
    /// x-coordinates.
    pub fn lagrange(points: &[(K, K)]) -> Self {
        assert!(!points.is_empty());
        let ctx = &points[0].0;
        let mut out = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut term = Poly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let scale = xi.sub(xj).inv().expect("distinct interpolation nodes");
                term = term.mul(&Poly::x_minus(xj).mul_scalar(&scale));
            }
            out = out.add(&term);
        }
        let _ = ctx;
        out
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64(i as i64)))
            .collect();
        Poly::from_coeffs(out)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Coefficients of `p(x0 + s)` as a polynomial in `s` (Taylor shift).
    pub fn shift(&self, x0: &K) -> Self {
        let mut acc = Poly::zero();
        let lin = Poly::from_coeffs(vec![x0.clone(), x0.one_like()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Resultant Res(self, other) via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> K {
        let ctx = self
            .coeffs
            .first()
            .or_else(|| other.coeffs.first())
            .expect("resultant needs a nonzero operand");
        let zero = ctx.zero_like();
        let one = ctx.one_like();
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = one.clone();
        loop {
            if b.is_zero() {
                return if a.degree() == Some(0) { acc } else { zero };
            }
            if b.degree() == Some(0) {
                let mut p = one.clone();
                for _ in 0..a.coeffs.len().saturating_sub(1) {
                    p = p.mul(b.lc().unwrap());
                }
                return acc.mul(&p);
            }
            let da = a.deg();
            let db = b.deg();
            let r = a.rem(&b).expect("nonzero divisor");
            let dr = r.deg();
            // Res(a, b) = (-1)^(da*db) lc(b)^(da - dr) Res(b, r)
            let mut factor = one.clone();
            for _ in 0..(da - dr) {
                factor = factor.mul(b.lc().unwrap());
            }
            if (da * db) % 2 == 1 {
                factor = factor.neg();
            }
            acc = acc.mul(&factor);
            a = b;
            b = r;
        }
    }

    /// Discriminant of a nonconstant polynomial.
    pub fn discriminant(&self) -> K {
        let d = self.deg();
        assert!(d >= 1, "discriminant of a constant");
        let fp = self.derivative();
        let lc = self.lc().unwrap();
        if fp.is_zero() {
            return lc.zero_like();
        }
        let res = self.resultant(&fp);
        let mut out = res.div(lc);
        if (d * (d - 1) / 2) % 2 == 1 {
            out = out.neg();
        }
        out
    }
}

fn write_term<K: Field>(
    f: &mut fmt::Formatter<'_>,
    c: &K,
    k: usize,
    first: bool,
) -> fmt::Result {
    let zero = c.zero_like();
    let negative = *c < zero;
    let mag = if negative { c.neg() } else { c.clone() };
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    match k {
        0 => write!(f, "{mag}"),
        _ => {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                write!(f, "x")
            } else {
                write!(f, "x^{k}")
            }
        }
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fq::Fq;
    use crate::arith::rat::Rat;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn poly_q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(cs.iter().map(|&c| q(c)).collect())
    }

    fn poly_f(cs: &[i64], p: u64) -> Poly<Fq> {
        Poly::from_coeffs(cs.iter().map(|&c| Fq::new(c, p).unwrap()).collect())
    }

    #[test]
    fn mul_reduces_mod_p() {
        // (x+3)(x+4) = x^2 + 5 over F_7
        let a = poly_f(&[3, 1], 7);
        let b = poly_f(&[4, 1], 7);
        assert_eq!(a.mul(&b), poly_f(&[5, 0, 1], 7));
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(x^2-1, x-1) = x-1
        let a = poly_q(&[-1, 0, 1]);
        let b = poly_q(&[-1, 1]);
        assert_eq!(a.gcd(&b), poly_q(&[-1, 1]));
    }

    #[test]
    fn xgcd_unit_case() {
        // xgcd(x, 1) = (1, 0, 1)
        let a = poly_q(&[0, 1]);
        let b = poly_q(&[1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, poly_q(&[1]));
        assert_eq!(s, Poly::zero());
        assert_eq!(t, poly_q(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn shift_is_taylor() {
        let p = poly_q(&[1, 2, 1]); // (x+1)^2
        let s = p.shift(&q(-1));
        assert_eq!(s, poly_q(&[0, 0, 1]));
    }

    #[test]
    fn discriminant_of_cubic() {
        // disc(x^3 + ax + b) = -4a^3 - 27b^2; for x^3 - x: 4
        let f = poly_q(&[0, -1, 0, 1]);
        assert_eq!(f.discriminant(), q(4));
        // x^3 - 2: -108
        let g = poly_q(&[-2, 0, 0, 1]);
        assert_eq!(g.discriminant(), q(-108));
    }

    #[test]
    fn display_round() {
        let f = poly_q(&[-1, -1, 0, 2]);
        assert_eq!(f.to_string(), "2*x^3 - x - 1");
        let g = poly_f(&[5, 0, 1], 7);
        assert_eq!(g.to_string(), "x^2 + 5");
        assert_eq!(Poly::<Rat>::zero().to_string(), "0");
    }

    #[test]
    fn squarefree_char_p_edge() {
        // x^5 + 1 = (x+1)^5 over F_5
        let f = poly_f(&[1, 0, 0, 0, 0, 1], 5);
        assert!(!f.is_squarefree());
        let g = poly_f(&[1, 0, 0, 0, 0, 1], 7);
        assert!(g.is_squarefree());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly_q() -> impl Strategy<Value = Poly<Rat>> {
            proptest::collection::vec(-6i64..7, 0..6)
                .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(Rat::from_int).collect()))
        }

        proptest! {
            #[test]
            fn divmod_invariant(a in arb_poly_q(), b in arb_poly_q()) {
                prop_assume!(!b.is_zero());
                let (qq, r) = a.divmod(&b).unwrap();
                prop_assert_eq!(qq.mul(&b).add(&r), a);
                prop_assert!(r.deg() < b.deg());
            }

            #[test]
            fn xgcd_bezout(a in arb_poly_q(), b in arb_poly_q()) {
                prop_assume!(!a.is_zero() || !b.is_zero());
                let (g, s, t) = a.xgcd(&b);
                prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g.clone());
                if !g.is_zero() {
                    prop_assert!(g.is_monic());
                    prop_assert!(a.rem(&g).unwrap().is_zero());
                    prop_assert!(b.rem(&g).unwrap().is_zero());
                }
            }
        }
    }
}
