//! Exact-arithmetic toolkit for Ceresa cycles of Picard curves
//! `y³ = x⁴ + ax² + bx + c`.
//!
//! The Chow-group torsion of the Ceresa cycle of a Picard curve is decided by
//! whether the point `P_f = (I, J)` is torsion on `E_f: y² = 4x³ − 27·disc`.
//! Around that decision the crate provides the supporting quartic invariant
//! theory, exact elliptic-curve arithmetic, generators for explicit torsion
//! families, character-theoretic checks of the cohomological vanishing
//! criteria for finite group actions, and the genus-3 automorphism strata.
//!
//! The algebra is written against the [`exactmath::Scalar`] trait; the
//! aliases below fix the scalar to arbitrary-precision rationals, which is
//! what every decision procedure uses.

pub mod ceresa;
pub mod elliptic;
pub mod error;
pub mod exactmath;
pub mod quartic;
pub mod repcrit;
pub mod strata;
pub mod wire;

pub use error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rat = num_rational::BigRational;
pub type UPoly = exactmath::Poly<Rat>;
pub type Quartic = quartic::DepressedQuartic<Rat>;
pub type Invariants = quartic::QuarticInvariants<Rat>;
pub type Curve = elliptic::WeierstrassCurve<Rat>;
pub type Point = elliptic::ECPoint<Rat>;
