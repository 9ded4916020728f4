//! Quasi-shuffle algebras on words, the linear maps induced by formal power
//! series, their Hopf structure, generating-function identities in an extra
//! variable, and evaluation to harmonic sums, q-series and zeta-type values.
//!
//! Everything algebraic is exact and generic over a [`Scalar`] coefficient
//! ring. Floating point appears only in [`evaluators`].

pub mod error;
pub mod evaluators;
pub mod hopf;
pub mod lambda_series;
pub mod scalars;
pub mod series_maps;
pub mod verify;
pub mod word_algebra;

pub use error::{Error, Result};
pub use scalars::{Bindings, NumericScalar, PolyScalar, QSeries, Rational, Scalar, Tolerance};
pub use series_maps::{Composition, FormalSeries, LinearWordMap, NamedSeries};
pub use word_algebra::{Alphabet, Letter, LinComb, NcPoly, Product, Tensor, Word};
