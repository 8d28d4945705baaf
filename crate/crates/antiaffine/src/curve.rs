//! Hyperelliptic curve models y^2 = f(x), their points, the hyperelliptic
//! involution, point enumeration over finite fields, and local expansions of
//! functions at a point.
//!
//! A model is nonsingular in the affine chart when f is squarefree. Odd-degree
//! models have a single point at infinity; even-degree models have two
//! branches, rational exactly when the leading coefficient is a square. Most
//! divisor arithmetic elsewhere requires an odd-degree model; `to_odd_model`
//! moves a rational Weierstrass point to infinity when one exists.

use crate::arith::{series, Field, Poly};
use crate::error::{Error, Result};
use std::fmt;

/// Branch tag for points at infinity. `Only` is the unique point of an
/// odd-degree model; `Pos`/`Neg` are the two branches of an even-degree model,
/// distinguished by the sign convention of `OddModelMap::map_point`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum InfBranch {
    Only,
    Pos,
    Neg,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CurvePoint<K> {
    Affine(K, K),
    Infinity(InfBranch),
}

impl<K: Field> CurvePoint<K> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity(_))
    }

    pub fn x(&self) -> Option<&K> {
        match self {
            CurvePoint::Affine(x, _) => Some(x),
            _ => None,
        }
    }

    pub fn y(&self) -> Option<&K> {
        match self {
            CurvePoint::Affine(_, y) => Some(y),
            _ => None,
        }
    }

    /// Fixed point of the involution: (x, 0) or the odd-model infinity.
    pub fn is_weierstrass(&self) -> bool {
        match self {
            CurvePoint::Affine(_, y) => y.is_zero(),
            CurvePoint::Infinity(b) => *b == InfBranch::Only,
        }
    }
}

impl<K: Field> fmt::Display for CurvePoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine(x, y) => write!(f, "({x},{y})"),
            CurvePoint::Infinity(InfBranch::Only) => write!(f, "inf"),
            CurvePoint::Infinity(InfBranch::Pos) => write!(f, "inf+"),
            CurvePoint::Infinity(InfBranch::Neg) => write!(f, "inf-"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HyperellipticCurve<K> {
    f: Poly<K>,
    genus: usize,
}

impl<K: Field> HyperellipticCurve<K> {
    /// Validates deg f >= 1, characteristic != 2 and f squarefree; the genus
    /// is ceil(deg f / 2) - 1. Genus 0 models are accepted.
    pub fn new(f: Poly<K>) -> Result<Self> {
        let d = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::DegreeTooSmall),
        };
        if f.lc().unwrap().characteristic() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let genus = (d + 1) / 2 - 1;
        Ok(HyperellipticCurve { f, genus })
    }

    pub fn f(&self) -> &Poly<K> {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// A sample field element carrying the base-field context.
    pub fn ctx(&self) -> &K {
        self.f.lc().unwrap()
    }

    pub fn characteristic(&self) -> u64 {
        self.ctx().characteristic()
    }

    pub fn is_finite_field(&self) -> bool {
        self.characteristic() != 0
    }

    pub fn is_odd_model(&self) -> bool {
        self.f.degree().unwrap() % 2 == 1
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }

    pub fn require_odd_model(&self) -> Result<()> {
        if self.is_odd_model() {
            Ok(())
        } else {
            Err(Error::EvenDegreeModel)
        }
    }

    pub fn is_on_curve(&self, p: &CurvePoint<K>) -> bool {
        match p {
            CurvePoint::Affine(x, y) => y.square() == self.f.eval(x),
            CurvePoint::Infinity(InfBranch::Only) => self.is_odd_model(),
            CurvePoint::Infinity(_) => !self.is_odd_model() && self.f.lc().unwrap().is_square(),
        }
    }

    /// The hyperelliptic involution: (x, y) -> (x, -y); swaps the infinity
    /// branches of an even-degree model and fixes the odd-model infinity.
    pub fn involution(&self, p: &CurvePoint<K>) -> Result<CurvePoint<K>> {
        if !self.is_on_curve(p) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(match p {
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), y.neg()),
            CurvePoint::Infinity(InfBranch::Only) => CurvePoint::Infinity(InfBranch::Only),
            CurvePoint::Infinity(InfBranch::Pos) => CurvePoint::Infinity(InfBranch::Neg),
            CurvePoint::Infinity(InfBranch::Neg) => CurvePoint::Infinity(InfBranch::Pos),
        })
    }

    /// All rational points over the (finite) base field, sorted.
    pub fn enumerate_points(&self) -> Result<Vec<CurvePoint<K>>> {
        let p = self.characteristic();
        if p == 0 {
            return Err(Error::NotFiniteField);
        }
        let ctx = self.ctx();
        let mut out = Vec::new();
        for v in 0..p {
            let x = ctx.from_i64(v as i64);
            let z = self.f.eval(&x);
            if z.is_zero() {
                out.push(CurvePoint::Affine(x, ctx.zero_like()));
            } else if let Some(r) = z.sqrt() {
                out.push(CurvePoint::Affine(x.clone(), r.clone()));
                out.push(CurvePoint::Affine(x, r.neg()));
            }
        }
        if self.is_odd_model() {
            out.push(CurvePoint::Infinity(InfBranch::Only));
        } else if self.f.lc().unwrap().is_square() {
            out.push(CurvePoint::Infinity(InfBranch::Pos));
            out.push(CurvePoint::Infinity(InfBranch::Neg));
        }
        out.sort();
        Ok(out)
    }

    pub fn count_points(&self) -> Result<usize> {
        Ok(self.enumerate_points()?.len())
    }

    /// Rational Weierstrass points: (r, 0) for rational roots r of f, plus the
    /// odd-model infinity.
    pub fn weierstrass_points(&self) -> Result<Vec<CurvePoint<K>>> {
        let mut out: Vec<CurvePoint<K>> = K::poly_roots(self.f.coeffs())?
            .into_iter()
            .map(|r| {
                let z = r.zero_like();
                CurvePoint::Affine(r, z)
            })
            .collect();
        if self.is_odd_model() {
            out.push(CurvePoint::Infinity(InfBranch::Only));
        }
        out.sort();
        Ok(out)
    }

    pub fn discriminant(&self) -> K {
        self.f.discriminant()
    }

    /// Transform an even-degree model to an odd-degree one by moving a
    /// rational Weierstrass point to infinity (x = x0 + 1/t, y = s/t^(g+1)).
    /// Returns an identity map for a model that is already odd.
    pub fn to_odd_model(&self) -> Result<OddModelMap<K>> {
        if self.is_odd_model() {
            return Ok(OddModelMap {
                curve: self.clone(),
                pivot: None,
                genus: self.genus,
            });
        }
        let roots = K::poly_roots(self.f.coeffs())?;
        let x0 = roots.into_iter().min().ok_or(Error::NoRationalWeierstrass)?;
        let shifted = self.f.shift(&x0);
        let d = self.degree();
        let mut coeffs = vec![self.ctx().zero_like(); d + 1];
        for (j, c) in shifted.coeffs().iter().enumerate() {
            coeffs[d - j] = c.clone();
        }
        let curve = HyperellipticCurve::new(Poly::from_coeffs(coeffs))?;
        debug_assert!(curve.is_odd_model());
        debug_assert_eq!(curve.genus(), self.genus);
        Ok(OddModelMap {
            curve,
            pivot: Some(x0),
            genus: self.genus,
        })
    }
}

/// Change of coordinates from a (possibly even-degree) source model to an
/// odd-degree target model.
#[derive(Clone, Debug)]
pub struct OddModelMap<K> {
    curve: HyperellipticCurve<K>,
    /// Weierstrass x-coordinate moved to infinity; `None` for the identity.
    pivot: Option<K>,
    genus: usize,
}

impl<K: Field> OddModelMap<K> {
    pub fn curve(&self) -> &HyperellipticCurve<K> {
        &self.curve
    }

    pub fn is_identity(&self) -> bool {
        self.pivot.is_none()
    }

    pub fn pivot(&self) -> Option<&K> {
        self.pivot.as_ref()
    }

    pub fn map_point(&self, p: &CurvePoint<K>) -> Result<CurvePoint<K>> {
        let Some(x0) = &self.pivot else {
            return Ok(p.clone());
        };
        match p {
            CurvePoint::Affine(x, y) => {
                if x == x0 {
                    if y.is_zero() {
                        return Ok(CurvePoint::Infinity(InfBranch::Only));
                    }
                    return Err(Error::PointNotOnCurve);
                }
                let t = x.sub(x0).inv().unwrap();
                let mut s = y.clone();
                for _ in 0..=self.genus {
                    s = s.mul(&t);
                }
                Ok(CurvePoint::Affine(t, s))
            }
            CurvePoint::Infinity(InfBranch::Only) => Err(Error::PointNotOnCurve),
            CurvePoint::Infinity(branch) => {
                // The two infinity branches land on x = 0; the Pos branch is
                // the one with the Ord-smaller square root of lc(f).
                let lc = self.curve.f().coeff(0).unwrap();
                let r = lc.sqrt().ok_or(Error::PointNotOnCurve)?;
                let c = if r <= r.neg() { r } else { r.neg() };
                let zero = c.zero_like();
                Ok(match branch {
                    InfBranch::Pos => CurvePoint::Affine(zero, c),
                    InfBranch::Neg => CurvePoint::Affine(zero, c.neg()),
                    InfBranch::Only => unreachable!(),
                })
            }
        }
    }
}

/// Local expansions of curve functions.
///
/// Canonical local parameters: s = x - x0 at an affine non-Weierstrass point,
/// t = y at an affine Weierstrass point, and t = x^g / y at the odd-model
/// infinity. Orders and leading coefficients reported by this module are
/// always relative to these parameters, which makes leading coefficients
/// multiplicative across products of functions.
pub mod local {
    use super::*;

    /// Multiplicity of `x0` as a root of `p` (0 when not a root).
    pub fn root_multiplicity<K: Field>(p: &Poly<K>, x0: &K) -> usize {
        if p.is_zero() {
            return 0;
        }
        let shifted = p.shift(x0);
        shifted
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Series of y in the canonical parameter at an affine point, to `prec`
    /// coefficients. At a Weierstrass point this is just `t` itself; callers
    /// should use `x_series_at_weierstrass` for x there.
    pub fn y_series<K: Field>(
        curve: &HyperellipticCurve<K>,
        x0: &K,
        y0: &K,
        prec: usize,
    ) -> Vec<K> {
        debug_assert!(!y0.is_zero());
        let ctx = curve.ctx();
        let fs = series::truncate(curve.f().shift(x0).coeffs().to_vec(), ctx, prec);
        series::sqrt_with(&fs, y0, ctx, prec)
    }

    /// Series u(t) with x = x0 + u(t) and f(x0 + u(t)) = t^2 at a Weierstrass
    /// point (x0, 0).
    pub fn x_series_at_weierstrass<K: Field>(
        curve: &HyperellipticCurve<K>,
        x0: &K,
        prec: usize,
    ) -> Vec<K> {
        let ctx = curve.ctx();
        let fs = curve.f().shift(x0);
        let dfs = fs.derivative();
        let d0 = fs.coeffs()[1].clone();
        debug_assert!(fs.coeffs()[0].is_zero() && !d0.is_zero());
        // t^2 as a series.
        let mut t2 = vec![ctx.zero_like(); prec.max(3)];
        t2[2] = ctx.one_like();
        let mut u = vec![ctx.zero_like(); prec];
        if prec > 2 {
            u[2] = d0.inv().unwrap();
        }
        // Newton: u <- u - (f(x0+u) - t^2) / f'(x0+u); quadratic convergence
        // from a start correct mod t^4.
        let mut correct = 4usize;
        while correct < prec + 2 {
            let fu = series::poly_at(&fs, &u, ctx, prec);
            let num = series::sub(&fu, &t2, ctx, prec);
            let den = series::poly_at(&dfs, &u, ctx, prec);
            let den_inv = series::inv(&den, ctx, prec).expect("f'(x0) != 0");
            let corr = series::mul(&num, &den_inv, ctx, prec);
            u = series::sub(&u, &corr, ctx, prec);
            correct *= 2;
        }
        u
    }

    /// Series of a(x) + b(x) y at an affine point, in the canonical parameter.
    pub fn expand_ab<K: Field>(
        curve: &HyperellipticCurve<K>,
        x0: &K,
        y0: &K,
        a: &Poly<K>,
        b: &Poly<K>,
        prec: usize,
    ) -> Vec<K> {
        let ctx = curve.ctx();
        if y0.is_zero() {
            let u = x_series_at_weierstrass(curve, x0, prec);
            let av = series::poly_at(&a.shift(x0), &u, ctx, prec);
            let bv = series::poly_at(&b.shift(x0), &u, ctx, prec);
            // y = t exactly in this parameter.
            let mut t = vec![ctx.zero_like(); prec];
            if prec > 1 {
                t[1] = ctx.one_like();
            }
            series::add(&av, &series::mul(&bv, &t, ctx, prec), ctx, prec)
        } else {
            let ys = y_series(curve, x0, y0, prec);
            let av = series::truncate(a.shift(x0).coeffs().to_vec(), ctx, prec);
            let bv = series::truncate(b.shift(x0).coeffs().to_vec(), ctx, prec);
            series::add(&av, &series::mul(&bv, &ys, ctx, prec), ctx, prec)
        }
    }

    /// Order and leading coefficient of a(x) + b(x) y at a point, in the
    /// canonical local parameter. Errors on the zero function; infinity
    /// requires an odd-degree model.
    pub fn ord_lead_ab<K: Field>(
        curve: &HyperellipticCurve<K>,
        point: &CurvePoint<K>,
        a: &Poly<K>,
        b: &Poly<K>,
    ) -> Result<(i64, K)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match point {
            CurvePoint::Infinity(InfBranch::Only) => {
                curve.require_odd_model()?;
                let g = curve.genus() as i64;
                let lcf_inv = curve.f().lc().unwrap().inv().unwrap();
                let pole_a = a.degree().map(|d| 2 * d as i64);
                let pole_b = b.degree().map(|d| 2 * d as i64 + 2 * g + 1);
                let (pole, lead) = match (pole_a, pole_b) {
                    (Some(pa), Some(pb)) if pa > pb => (pa, lead_inf(a, &lcf_inv, 0)),
                    (Some(pa), None) => (pa, lead_inf(a, &lcf_inv, 0)),
                    (Some(_), Some(pb)) => (pb, lead_inf(b, &lcf_inv, curve.genus())),
                    (None, Some(pb)) => (pb, lead_inf(b, &lcf_inv, curve.genus())),
                    (None, None) => unreachable!(),
                };
                Ok((-pole, lead))
            }
            CurvePoint::Infinity(_) => Err(Error::EvenDegreeModel),
            CurvePoint::Affine(x0, y0) => {
                if !curve.is_on_curve(point) {
                    return Err(Error::PointNotOnCurve);
                }
                // Order bound via the norm a^2 - b^2 f.
                let norm = a.mul(a).sub(&b.mul(b).mul(curve.f()));
                debug_assert!(!norm.is_zero());
                let m = root_multiplicity(&norm, x0);
                let prec = 2 * m + 2;
                let s = expand_ab(curve, x0, y0, a, b, prec);
                let ord = s
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("order bounded by the norm multiplicity");
                Ok((ord as i64, s[ord].clone()))
            }
        }
    }

    fn lead_inf<K: Field>(p: &Poly<K>, lcf_inv: &K, extra: usize) -> K {
        // Leading coefficient of p(x) (times y when extra = g) at infinity in
        // the parameter t = x^g / y, where x = t^-2 (1/lc f + O(t^2)).
        let mut out = p.lc().unwrap().clone();
        for _ in 0..p.degree().unwrap() + extra {
            out = out.mul(lcf_inv);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fq, Rat};

    fn poly_q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(cs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    fn poly_f(cs: &[i64], p: u64) -> Poly<Fq> {
        Poly::from_coeffs(cs.iter().map(|&c| Fq::new(c, p).unwrap()).collect())
    }

    fn pt_q(x: i64, y: i64) -> CurvePoint<Rat> {
        CurvePoint::Affine(Rat::from_int(x), Rat::from_int(y))
    }

    #[test]
    fn genus_computation() {
        // x^5 + 1 -> genus 2; x^3 - x -> genus 1; x^2 - 1 -> genus 0
        let c = HyperellipticCurve::new(poly_q(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 2);
        let c = HyperellipticCurve::new(poly_q(&[0, -1, 0, 1])).unwrap();
        assert_eq!(c.genus(), 1);
        let c = HyperellipticCurve::new(poly_q(&[-1, 0, 1])).unwrap();
        assert_eq!(c.genus(), 0);
        assert!(!c.is_odd_model());
    }

    #[test]
    fn rejects_singular_models() {
        // x^2 has a repeated root
        assert!(matches!(
            HyperellipticCurve::new(poly_q(&[0, 0, 1])),
            Err(Error::NotSquarefree)
        ));
        assert!(matches!(
            HyperellipticCurve::new(poly_q(&[5])),
            Err(Error::DegreeTooSmall)
        ));
    }

    #[test]
    fn membership_and_involution() {
        let c = HyperellipticCurve::new(poly_q(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert!(c.is_on_curve(&pt_q(0, 1)));
        assert!(!c.is_on_curve(&pt_q(1, 1)));
        assert!(c.is_on_curve(&CurvePoint::Infinity(InfBranch::Only)));
        assert_eq!(c.involution(&pt_q(0, 1)).unwrap(), pt_q(0, -1));
        assert_eq!(c.involution(&pt_q(-1, 0)).unwrap(), pt_q(-1, 0));
    }

    #[test]
    fn point_enumeration_counts() {
        // y^2 = x^3 - x over F_5: 8 points
        let c = HyperellipticCurve::new(poly_f(&[0, -1, 0, 1], 5)).unwrap();
        assert_eq!(c.count_points().unwrap(), 8);
        // y^2 = x^2 - 1 over F_5: a conic, p + 1 points
        let c = HyperellipticCurve::new(poly_f(&[-1, 0, 1], 5)).unwrap();
        assert_eq!(c.count_points().unwrap(), 6);
    }

    #[test]
    fn weil_bound_over_small_fields() {
        for p in [3u64, 5, 7, 11, 13] {
            for coeffs in [
                vec![0, -1, 0, 1],       // genus 1
                vec![1, 1, 0, 0, 0, 1],  // genus 2
                vec![1, 1, 0, 0, 0, 0, 0, 1], // genus 3
            ] {
                let f = poly_f(&coeffs, p);
                let Ok(c) = HyperellipticCurve::new(f) else {
                    continue; // not squarefree mod this p
                };
                let n = c.count_points().unwrap() as f64;
                let g = c.genus() as f64;
                assert!(
                    (n - (p as f64 + 1.0)).abs() <= 2.0 * g * (p as f64).sqrt() + 1e-9,
                    "Weil bound fails for p={p}, f={:?}",
                    coeffs
                );
            }
        }
    }

    #[test]
    fn involution_is_an_automorphism() {
        let c = HyperellipticCurve::new(poly_f(&[0, -1, 0, 1], 13)).unwrap();
        for p in c.enumerate_points().unwrap() {
            let q = c.involution(&p).unwrap();
            assert!(c.is_on_curve(&q));
            assert_eq!(c.involution(&q).unwrap(), p);
        }
    }

    #[test]
    fn odd_model_transform() {
        // y^2 = x^2 - 1: roots +-1, pivot -1 moves to infinity.
        let c = HyperellipticCurve::new(poly_q(&[-1, 0, 1])).unwrap();
        let map = c.to_odd_model().unwrap();
        assert!(map.curve().is_odd_model());
        assert_eq!(map.curve().genus(), 0);
        for p in [pt_q(1, 0), pt_q(5, 0)] {
            if c.is_on_curve(&p) {
                let q = map.map_point(&p).unwrap();
                assert!(map.curve().is_on_curve(&q));
            }
        }
        // (5, y)? 24 is not a rational square; use branch points instead.
        let plus = map.map_point(&CurvePoint::Infinity(InfBranch::Pos)).unwrap();
        let minus = map.map_point(&CurvePoint::Infinity(InfBranch::Neg)).unwrap();
        assert!(map.curve().is_on_curve(&plus));
        assert!(map.curve().is_on_curve(&minus));
        assert_ne!(plus, minus);
    }

    #[test]
    fn odd_model_over_fq_preserves_counts() {
        let c = HyperellipticCurve::new(poly_f(&[-1, 0, 1], 5)).unwrap();
        let map = c.to_odd_model().unwrap();
        // Bijection on points: pivot Weierstrass <-> infinity, branches <-> x=0.
        assert_eq!(
            c.count_points().unwrap(),
            map.curve().count_points().unwrap()
        );
        for p in c.enumerate_points().unwrap() {
            let q = map.map_point(&p).unwrap();
            assert!(map.curve().is_on_curve(&q));
        }
    }

    #[test]
    fn local_orders() {
        // y^2 = x^3 - x over F_13, where points abound; f(5) = 120 = 3 = 4^2.
        let c = HyperellipticCurve::new(poly_f(&[0, -1, 0, 1], 13)).unwrap();
        let x0 = Fq::new(5, 13).unwrap();
        let y0 = c.f().eval(&x0).sqrt().unwrap();
        let p = CurvePoint::Affine(x0, y0);
        let (ord, lead) = local::ord_lead_ab(&c, &p, &poly_f(&[-5, 1], 13), &Poly::zero()).unwrap();
        assert_eq!(ord, 1);
        assert!(lead.is_one());
        // At the Weierstrass point (0,0), x has order 2 with lead 1/f'(0).
        let w = CurvePoint::Affine(Fq::new(0, 13).unwrap(), Fq::new(0, 13).unwrap());
        let (ord, lead) = local::ord_lead_ab(&c, &w, &poly_f(&[0, 1], 13), &Poly::zero()).unwrap();
        assert_eq!(ord, 2);
        let fp0 = c.f().derivative().eval(&Fq::new(0, 13).unwrap());
        assert_eq!(lead, fp0.inv().unwrap());
        // y has order 1 at (0,0).
        let one = Poly::constant(Fq::new(1, 13).unwrap());
        let (ord, lead) = local::ord_lead_ab(&c, &w, &Poly::zero(), &one).unwrap();
        assert_eq!(ord, 1);
        assert!(lead.is_one());
        // At infinity: ord(x) = -2, ord(y) = -3 for genus 1.
        let inf = CurvePoint::Infinity(InfBranch::Only);
        let (ord, _) = local::ord_lead_ab(&c, &inf, &poly_f(&[0, 1], 13), &Poly::zero()).unwrap();
        assert_eq!(ord, -2);
        let (ord, _) = local::ord_lead_ab(&c, &inf, &Poly::zero(), &one).unwrap();
        assert_eq!(ord, -3);
    }

    #[test]
    fn local_series_squares_to_f() {
        // y-series at a non-Weierstrass point actually satisfies y^2 = f.
        let c = HyperellipticCurve::new(poly_q(&[-2, 0, 0, 1])).unwrap(); // y^2 = x^3 - 2
        let x0 = Rat::from_int(3);
        let y0 = Rat::from_int(5);
        let prec = 6;
        let ys = local::y_series(&c, &x0, &y0, prec);
        let ctx = c.ctx();
        let sq = series::mul(&ys, &ys, ctx, prec);
        let fs = series::truncate(c.f().shift(&x0).coeffs().to_vec(), ctx, prec);
        assert_eq!(sq, fs);
        // x-series at the Weierstrass point of y^2 = x^3 - x.
        let c = HyperellipticCurve::new(poly_q(&[0, -1, 0, 1])).unwrap();
        let u = local::x_series_at_weierstrass(&c, &Rat::from_int(0), 8);
        let fu = series::poly_at(&c.f().shift(&Rat::from_int(0)), &u, c.ctx(), 8);
        let mut t2 = vec![Rat::zero(); 8];
        t2[2] = Rat::one();
        assert_eq!(fu, t2);
    }
}
