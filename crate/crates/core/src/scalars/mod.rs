//! Coefficient rings.
//!
//! Every algebraic structure in the crate is generic over [`Scalar`], an
//! exact commutative ring containing the rationals. Three rings are
//! provided: [`Rational`], [`PolyScalar`] (polynomials in named parameters)
//! and [`QSeries`] (truncated power series in `q`). [`NumericScalar`] is a
//! complex double used only by the numeric evaluators.

mod numeric;
mod poly;
mod qseries;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use numeric::{NumericScalar, Tolerance};
pub use poly::{Bindings, Monomial, PolyScalar};
pub use qseries::QSeries;
pub use rational::Rational;

/// An exact commutative coefficient ring containing `Q`.
///
/// Operators act by value; an operation between incompatible elements of
/// the same ring (two `QSeries` truncated at different orders) panics, and
/// the fallible `try_*` methods on the concrete types report it instead.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Image of a rational under the structure map `Q -> Self`.
    fn from_rational(q: Rational) -> Self;

    /// The element as a rational, when it is a constant.
    fn as_rational(&self) -> Option<Rational>;

    /// Multiplicative inverse, when the element is a unit.
    fn try_inverse(&self) -> Option<Self>;

    /// Splits the element for printing as a product factor: whether it
    /// should be written with a leading minus, and the magnitude text
    /// (`None` when the magnitude is 1). Multi-term values come back
    /// parenthesized.
    fn factor_parts(&self) -> (bool, Option<String>);

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    fn div_rational(&self, q: &Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() * Self::from_rational(q.recip()?))
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

/// `binom(p, n) = p (p-1) ... (p-n+1) / n!` for a ring element `p`.
pub fn binomial<R: Scalar>(p: &R, n: usize) -> R {
    let mut acc = R::one();
    for i in 0..n {
        acc = acc * (p.clone() - R::from_i64(i as i64));
    }
    acc.div_rational(&Rational::factorial(n))
        .expect("factorial is nonzero")
}
