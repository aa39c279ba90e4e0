//! Exact polynomial arithmetic over Q and its small algebraic extensions.

mod affine;
mod factor;
mod gcd;
mod modp;
mod mpoly;
mod quadext;
mod resultant;
mod sturm;
mod transvectant;
mod upoly;

pub use affine::AffineMap;
pub use factor::{factor, factor_univariate, squarefree, Factor, Factorization};
pub use gcd::{gcd, gcd_many};
pub use mpoly::{parse, rat, x, y, MPoly, Monomial, Var};
pub use quadext::QuadExt;
pub use resultant::{determinant, resultant, subresultant, subresultant_formal};
pub use sturm::{arc_samples, real_root_count, real_root_intervals, refine, sturm_sequence, RootInterval};
pub use transvectant::transvectant;
pub use upoly::UPoly;

use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// a·b without the normalising gcd when both are integers.
pub(crate) fn rmul(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// a += b without the normalising gcd when both are integers.
pub(crate) fn radd(a: &mut Rational, b: &Rational) {
    if a.is_integer() && b.is_integer() {
        *a = Rational::from_integer(a.numer() + b.numer());
    } else {
        *a += b;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("divisor does not divide the dividend exactly")]
    DivisibilityError,
    #[error("resultant of two polynomials constant in the eliminated variable")]
    DegenerateResultant,
    #[error("subresultant index out of range")]
    InvalidIndex,
    #[error("input shape is outside the supported factorisation profile")]
    UnsupportedShape,
    #[error("affine map is singular or has zero time scale")]
    SingularTransform,
    #[error("polynomial degree exceeds the requested formal degree")]
    InvalidDegree,
    #[error("elements of different quadratic fields were combined")]
    MixedRadicands,
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}
