//! Exact arithmetic kernel: prime fields, big rationals, univariate
//! polynomials, truncated series, and integer lattices in Hermite form.

pub mod field;
pub mod fq;
pub mod ints;
pub mod lattice;
pub mod poly;
pub mod rat;
pub mod series;

pub use field::Field;
pub use fq::Fq;
pub use lattice::IntLattice;
pub use poly::Poly;
pub use rat::Rat;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn fq_field_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
            for p in [3u64, 7, 13] {
                let (x, y, z) = (
                    Fq::new(a, p).unwrap(),
                    Fq::new(b, p).unwrap(),
                    Fq::new(c, p).unwrap(),
                );
                prop_assert_eq!(x.add(&y).mul(&z), x.mul(&z).add(&y.mul(&z)));
                prop_assert_eq!(x.mul(&y), y.mul(&x));
                if !x.is_zero() {
                    prop_assert!(x.mul(&x.inv().unwrap()).is_one());
                }
            }
        }

        #[test]
        fn rat_field_axioms(an in -20i64..20, ad in 1i64..9, bn in -20i64..20, bd in 1i64..9) {
            let a = Rat::new(an.into(), ad.into()).unwrap();
            let b = Rat::new(bn.into(), bd.into()).unwrap();
            prop_assert_eq!(a.add(&b), b.add(&a));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
            prop_assert_eq!(a.sub(&a), Rat::zero());
        }
    }
}
