//! Divisor-class arithmetic in the Jacobian of a hyperelliptic curve.
//!
//! Classes are held in Mumford representation (u, v): u monic of degree <= g,
//! deg v < deg u, u | v^2 - f, relative to an odd-degree model with its
//! single point at infinity as base point. Composition and reduction follow
//! Cantor's algorithm; every step also records the exact principal function
//! it divides out, so group operations can report h with
//! div(h) = D_a + D_b - D_(a+b), where D denotes the semi-reduced
//! representative minus (deg u) * infinity.

pub mod function;

pub use function::{FunctionProduct, TrackedFunction};

use crate::arith::{ints, Field, Poly};
use crate::curve::{CurvePoint, HyperellipticCurve, InfBranch};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MumfordClass<K> {
    u: Poly<K>,
    v: Poly<K>,
}

impl<K: Field> MumfordClass<K> {
    pub fn identity(curve: &HyperellipticCurve<K>) -> Self {
        let one = curve.ctx().one_like();
        MumfordClass {
            u: Poly::constant(one),
            v: Poly::zero(),
        }
    }

    /// Validated construction from Mumford coordinates.
    pub fn new(curve: &HyperellipticCurve<K>, u: Poly<K>, v: Poly<K>) -> Result<Self> {
        curve.require_odd_model()?;
        let c = MumfordClass { u, v };
        c.validate(curve)?;
        Ok(c)
    }

    pub fn validate(&self, curve: &HyperellipticCurve<K>) -> Result<()> {
        if !self.u.is_monic() {
            return Err(Error::Parse("u must be monic".into()));
        }
        let du = self.u.degree().unwrap();
        if du > curve.genus() {
            return Err(Error::Parse("deg u exceeds the genus".into()));
        }
        if self.v.deg() >= du as i64 {
            return Err(Error::Parse("v must have degree below u".into()));
        }
        let w = self.v.mul(&self.v).sub(curve.f());
        if !w.rem(&self.u)?.is_zero() {
            return Err(Error::Parse("u must divide v^2 - f".into()));
        }
        Ok(())
    }

    pub fn u(&self) -> &Poly<K> {
        &self.u
    }

    pub fn v(&self) -> &Poly<K> {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// Multiplicity of a rational point in the representative divisor
    /// div(u, v); infinity carries -deg u.
    pub fn multiplicity_at(&self, _curve: &HyperellipticCurve<K>, p: &CurvePoint<K>) -> i64 {
        match p {
            CurvePoint::Infinity(InfBranch::Only) => -(self.u.deg().max(0)),
            CurvePoint::Infinity(_) => 0,
            CurvePoint::Affine(x0, y0) => {
                let m = crate::curve::local::root_multiplicity(&self.u, x0) as i64;
                if m == 0 {
                    return 0;
                }
                if y0.is_zero() || self.v.eval(x0) == *y0 {
                    m
                } else {
                    0
                }
            }
        }
    }
}

impl<K: Field> fmt::Display for MumfordClass<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Reduce a semi-reduced pair to degree <= g, recording each step's
/// principal function (y - v)/u' in `product`.
fn reduce_fully<K: Field>(
    curve: &HyperellipticCurve<K>,
    mut u: Poly<K>,
    mut v: Poly<K>,
    product: &mut FunctionProduct<K>,
) -> MumfordClass<K> {
    let g = curve.genus();
    while u.degree().unwrap() > g {
        let num = curve.f().sub(&v.mul(&v));
        let u_next = num.div_exact(&u).expect("u divides v^2 - f").monic();
        let v_next = v.neg().rem(&u_next).expect("u' is nonzero");
        product.push(
            TrackedFunction::y_minus_over(&v, u_next.clone(), curve.ctx()),
            1,
        );
        u = u_next;
        v = v_next;
    }
    MumfordClass { u, v }
}

/// Cantor composition: the semi-reduced sum and the gcd polynomial d with
/// D_a + D_b = D_semi + div(d).
fn compose<K: Field>(
    curve: &HyperellipticCurve<K>,
    a: &MumfordClass<K>,
    b: &MumfordClass<K>,
) -> (Poly<K>, Poly<K>, Poly<K>) {
    let (d1, e1, e2) = a.u.xgcd(&b.u);
    let (d, c1, c2) = d1.xgcd(&a.v.add(&b.v));
    let s1 = c1.mul(&e1);
    let s2 = c1.mul(&e2);
    let s3 = c2;
    let u = a
        .u
        .mul(&b.u)
        .div_exact(&d.mul(&d))
        .expect("d^2 divides u1*u2");
    let t = s1
        .mul(&a.u)
        .mul(&b.v)
        .add(&s2.mul(&b.u).mul(&a.v))
        .add(&s3.mul(&a.v.mul(&b.v).add(curve.f())));
    let v = t
        .div_exact(&d)
        .expect("d divides the composition numerator")
        .rem(&u)
        .expect("u is nonzero");
    (u, v, d)
}

/// Group law with the exact principal function as a lazy product.
pub fn add_product<K: Field>(
    curve: &HyperellipticCurve<K>,
    a: &MumfordClass<K>,
    b: &MumfordClass<K>,
) -> (MumfordClass<K>, FunctionProduct<K>) {
    let (u, v, d) = compose(curve, a, b);
    let mut product = FunctionProduct::one();
    if d.degree().unwrap_or(0) >= 1 {
        product.push(TrackedFunction::from_poly(d), 1);
    }
    let out = reduce_fully(curve, u, v, &mut product);
    (out, product)
}

/// Group law; the returned function h satisfies
/// div(h) = D_a + D_b - D_(a+b).
pub fn add<K: Field>(
    curve: &HyperellipticCurve<K>,
    a: &MumfordClass<K>,
    b: &MumfordClass<K>,
) -> (MumfordClass<K>, TrackedFunction<K>) {
    let (out, product) = add_product(curve, a, b);
    (out, product.flatten(curve))
}

/// Group law without function tracking.
pub fn add_untracked<K: Field>(
    curve: &HyperellipticCurve<K>,
    a: &MumfordClass<K>,
    b: &MumfordClass<K>,
) -> MumfordClass<K> {
    let (u, v, _) = compose(curve, a, b);
    let mut sink = FunctionProduct::one();
    let out = reduce_fully(curve, u, v, &mut sink);
    out
}

pub fn neg<K: Field>(a: &MumfordClass<K>) -> MumfordClass<K> {
    MumfordClass {
        u: a.u.clone(),
        v: a.v.neg(),
    }
}

/// n * a by double-and-add.
pub fn smul<K: Field>(
    curve: &HyperellipticCurve<K>,
    n: i64,
    a: &MumfordClass<K>,
) -> MumfordClass<K> {
    let mut n = n;
    let mut base = a.clone();
    if n < 0 {
        base = neg(&base);
        n = -n;
    }
    let mut acc = MumfordClass::identity(curve);
    let mut pow = base;
    while n > 0 {
        if n & 1 == 1 {
            acc = add_untracked(curve, &acc, &pow);
        }
        n >>= 1;
        if n > 0 {
            pow = add_untracked(curve, &pow, &pow);
        }
    }
    acc
}

/// The class of [x - z]; identity exactly when x = z (and always in genus 0).
pub fn class_from_pair<K: Field>(
    curve: &HyperellipticCurve<K>,
    x: &CurvePoint<K>,
    z: &CurvePoint<K>,
) -> Result<MumfordClass<K>> {
    curve.require_odd_model()?;
    if !curve.is_on_curve(x) || !curve.is_on_curve(z) {
        return Err(Error::PointNotOnCurve);
    }
    let cx = embed_point(curve, x).0;
    let cz = embed_point(curve, z).0;
    Ok(add_untracked(curve, &cx, &neg(&cz)))
}

/// Mumford class of [P - infinity] (reduced), with the reduction's principal
/// function product.
pub fn embed_point<K: Field>(
    curve: &HyperellipticCurve<K>,
    p: &CurvePoint<K>,
) -> (MumfordClass<K>, FunctionProduct<K>) {
    let mut product = FunctionProduct::one();
    match p {
        CurvePoint::Infinity(_) => (MumfordClass::identity(curve), product),
        CurvePoint::Affine(x0, y0) => {
            let u = Poly::x_minus(x0);
            let v = Poly::constant(y0.clone());
            let out = reduce_fully(curve, u, v, &mut product);
            (out, product)
        }
    }
}

/// Exact order of a class over a finite field: exhaustive stepping on guarded
/// small instances, baby-step/giant-step above that, then refinement to the
/// minimal annihilating multiple.
pub fn order_ff<K: Field>(curve: &HyperellipticCurve<K>, a: &MumfordClass<K>) -> Result<u64> {
    let p = curve.characteristic();
    if p == 0 {
        return Err(Error::NotFiniteField);
    }
    if a.is_identity() {
        return Ok(1);
    }
    // (sqrt(p) + 1)^(2g) bounds the group order; isqrt(p) + 2 over-bounds
    // sqrt(p) + 1.
    let mut s = 0u64;
    while (s + 1) * (s + 1) <= p {
        s += 1;
    }
    let mut bound: u64 = 1;
    for _ in 0..2 * curve.genus() {
        bound = bound
            .checked_mul(s + 2)
            .ok_or_else(|| Error::GuardExceeded("order bound overflows".into()))?;
    }
    let multiple = if bound <= 4096 {
        order_by_stepping(curve, a, bound)?
    } else {
        order_by_bsgs(curve, a, bound)?
    };
    // Refine to the minimal order.
    let mut n = multiple;
    for (q, _) in ints::factor(multiple) {
        while n % q == 0 && smul(curve, (n / q) as i64, a).is_identity() {
            n /= q;
        }
    }
    Ok(n)
}

fn order_by_stepping<K: Field>(
    curve: &HyperellipticCurve<K>,
    a: &MumfordClass<K>,
    bound: u64,
) -> Result<u64> {
    let mut acc = a.clone();
    let mut k = 1u64;
    while !acc.is_identity() {
        if k > bound {
            return Err(Error::GuardExceeded(
                "order exceeds the Weil bound; inconsistent input".into(),
            ));
        }
        acc = add_untracked(curve, &acc, a);
        k += 1;
    }
    Ok(k)
}

fn order_by_bsgs<K: Field>(
    curve: &HyperellipticCurve<K>,
    a: &MumfordClass<K>,
    bound: u64,
) -> Result<u64> {
    let mut m = 1u64;
    while m * m < bound {
        m += 1;
    }
    let mut table: HashMap<MumfordClass<K>, u64> = HashMap::new();
    let mut baby = MumfordClass::identity(curve);
    for j in 0..m {
        table.entry(baby.clone()).or_insert(j);
        baby = add_untracked(curve, &baby, a);
    }
    // giant = m * a
    let giant = smul(curve, m as i64, a);
    let mut cur = giant.clone();
    for i in 1..=m + 1 {
        if let Some(&j) = table.get(&cur) {
            let n = i * m - j;
            if n > 0 {
                return Ok(n);
            }
        }
        cur = add_untracked(curve, &cur, &giant);
    }
    Err(Error::GuardExceeded(
        "baby-step/giant-step found no annihilator within the Weil bound".into(),
    ))
}

/// All reduced Mumford pairs over a small finite field (guarded at g <= 2,
/// p <= 13). The count lands in the Weil interval.
pub fn enumerate_group<K: Field>(
    curve: &HyperellipticCurve<K>,
) -> Result<Vec<MumfordClass<K>>> {
    let p = curve.characteristic();
    if p == 0 {
        return Err(Error::NotFiniteField);
    }
    curve.require_odd_model()?;
    if curve.genus() > 2 || p > 13 {
        return Err(Error::GuardExceeded(format!(
            "enumerate_group guarded at g <= 2, p <= 13 (got g = {}, p = {})",
            curve.genus(),
            p
        )));
    }
    let ctx = curve.ctx();
    let mut out = Vec::new();
    for du in 0..=curve.genus() {
        // monic u of degree du, arbitrary v of degree < du
        let mut uc = vec![0u64; du];
        loop {
            let mut u = Vec::with_capacity(du + 1);
            for &c in &uc {
                u.push(ctx.from_i64(c as i64));
            }
            u.push(ctx.one_like());
            let u = Poly::from_coeffs(u);
            let mut vc = vec![0u64; du];
            loop {
                let v = Poly::from_coeffs(vc.iter().map(|&c| ctx.from_i64(c as i64)).collect());
                let w = v.mul(&v).sub(curve.f());
                if w.rem(&u)?.is_zero() {
                    out.push(MumfordClass {
                        u: u.clone(),
                        v,
                    });
                }
                if !increment(&mut vc, p) {
                    break;
                }
            }
            if !increment(&mut uc, p) {
                break;
            }
        }
    }
    Ok(out)
}

fn increment(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Orders of all pairwise difference classes over a finite field, plus the
/// count of pairs with [x - z] = [sigma(z) - sigma(x)] (x != z).
#[derive(Clone, Debug)]
pub struct TorsionCensus<K> {
    pub orders: Vec<((CurvePoint<K>, CurvePoint<K>), u64)>,
    pub distribution: BTreeMap<u64, usize>,
    pub involution_coincidences: usize,
    pub offdiagonal_pairs: usize,
}

pub fn torsion_census<K: Field>(curve: &HyperellipticCurve<K>) -> Result<TorsionCensus<K>> {
    if !curve.is_finite_field() {
        return Err(Error::NotFiniteField);
    }
    curve.require_odd_model()?;
    let points = curve.enumerate_points()?;
    let mut orders = Vec::new();
    let mut distribution = BTreeMap::new();
    let mut coincidences = 0usize;
    let mut offdiag = 0usize;
    for x in &points {
        for z in &points {
            let c = class_from_pair(curve, x, z)?;
            let n = order_ff(curve, &c)?;
            *distribution.entry(n).or_insert(0) += 1;
            orders.push(((x.clone(), z.clone()), n));
            if x != z {
                offdiag += 1;
                let sx = curve.involution(x)?;
                let sz = curve.involution(z)?;
                if class_from_pair(curve, &sz, &sx)? == c {
                    coincidences += 1;
                }
            }
        }
    }
    Ok(TorsionCensus {
        orders,
        distribution,
        involution_coincidences: coincidences,
        offdiagonal_pairs: offdiag,
    })
}
