//! Exact computation in Jacobians and generalized Jacobians of hyperelliptic
//! curves.
//!
//! The library provides:
//!
//! - an exact arithmetic kernel (prime fields, big rationals, polynomials,
//!   integer lattices in Hermite form),
//! - hyperelliptic curve models y^2 = f(x) and divisor-class arithmetic in
//!   Mumford representation with principal-function tracking,
//! - Riemann-Roch spaces, the canonical class and related obstructions,
//! - generalized Jacobians of curves with ordinary multi-point singularities,
//!   presented as explicit semiabelian extensions with a computable group law,
//! - a decision engine that certifies torsion orders and integer relation
//!   lattices of divisor classes over Q, and decides whether the generalized
//!   Jacobian of a gluing datum is anti-affine,
//! - constructive search for gluing data with anti-affine Jacobian.

pub mod arith;
pub mod curve;
pub mod jacobian;
pub mod genjac;
pub mod linsys;
pub mod error;

pub use error::{Error, Result};
