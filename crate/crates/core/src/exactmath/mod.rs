//! Exact arithmetic foundation: the scalar abstraction, rationals,
//! univariate polynomials and cyclotomic-field elements.
//!
//! Everything above this layer that only needs field operations is written
//! against [`Scalar`]. The concrete scalar used throughout the crate is the
//! arbitrary-precision [`Rat`](crate::Rat); machine rationals such as
//! `Ratio<i64>` also satisfy the bound and are handy in tests.

mod cyclotomic;
mod poly;
mod rat;

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub use cyclotomic::{cyclotomic_polynomial, root_of_unity, CycNum};
pub use poly::Poly;
pub use rat::{format_rat, parse_rat, rational_nth_root, RatStr};

/// A field element with exact equality.
///
/// Division is assumed to be exact field division. Integer types satisfy the
/// trait bounds but not that assumption, so do not instantiate with them.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("scalar type cannot represent small integers")
    }

    fn powu(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}
