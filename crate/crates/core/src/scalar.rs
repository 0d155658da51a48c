//! Scalar abstractions.
//!
//! Polynomial arithmetic only needs a commutative ring with exact equality,
//! so [`Coefficient`] is implemented for the machine integers and for
//! [`BigInt`]. The simplex kernel needs an ordered field; [`LpScalar`] covers
//! [`BigRational`] (exact) and `f64` (tolerance-based, for quick experiments).

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, NumAssign, Signed};

/// Ring of polynomial coefficients.
pub trait Coefficient: Clone + Debug + Eq + Hash + Num + NumAssign + Signed + FromPrimitive {}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}

/// Ordered field used by the simplex kernel.
pub trait LpScalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {
    /// Magnitude below which a value counts as zero.
    fn tolerance() -> Self;

    fn is_negligible(&self) -> bool {
        self.abs() <= Self::tolerance()
    }

    fn is_strictly_positive(&self) -> bool {
        *self > Self::tolerance()
    }

    fn is_strictly_negative(&self) -> bool {
        *self < -Self::tolerance()
    }
}

impl LpScalar for BigRational {
    fn tolerance() -> Self {
        num_traits::Zero::zero()
    }
}

impl LpScalar for f64 {
    fn tolerance() -> Self {
        1e-9
    }
}
