//! The ring contract the Hall-algebra engine is generic over.

use std::fmt::{Debug, Display};

use super::{LaurentPoly, QrtScalar, RatFunc};

/// Exact commutative ring with structural equality.
///
/// Constants are supplied by the backend, since some rings (like `Q(√q)`)
/// carry a parameter that a bare `zero()` could not know.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Exact quotient, `None` if it does not exist in the ring.
    fn try_div(&self, other: &Self) -> Option<Self>;
    fn zero_like(&self) -> Self {
        self.minus(self)
    }
}

/// A scalar ring in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for LaurentPoly {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
}

impl Scalar for RatFunc {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        RatFunc::try_div(self, other)
    }
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
}

impl Field for RatFunc {
    fn inverse(&self) -> Option<Self> {
        RatFunc::inverse(self)
    }
}

impl Scalar for QrtScalar {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        QrtScalar::is_zero(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        QrtScalar::try_div(self, other).ok()
    }
    fn zero_like(&self) -> Self {
        QrtScalar::zero(self.base())
    }
}

impl Field for QrtScalar {
    fn inverse(&self) -> Option<Self> {
        QrtScalar::inverse(self)
    }
}
