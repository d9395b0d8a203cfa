//! Exact scalar arithmetic: Laurent polynomials, rational functions,
//! q-integers and the field `Q(√q)`.

mod laurent;
mod qint;
mod qrt;
mod ratfunc;
mod scalar;

pub use laurent::LaurentPoly;
pub use qint::{
    balanced_binomial, balanced_factorial, balanced_qint, gauss_binomial,
    gauss_binomial_or_zero, qfactorial_plus, qint_plus,
};
pub use qrt::{qrt_mul, QrtScalar};
pub use ratfunc::{poly_gcd, RatFunc};
pub use scalar::{Field, Scalar};
