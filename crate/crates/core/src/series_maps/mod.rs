//! Compositions, truncated power series in `t`, and the linear maps `Ψ_f`
//! they induce on `k<A>`.
//!
//! A series `f = c_1 t + c_2 t^2 + ...` acts on a word `w` by summing
//! `c_{i_1} ... c_{i_m} I[w]` over the compositions `I = (i_1, ..., i_m)` of
//! the length of `w`. The production path [`psi`] uses an equivalent
//! quadratic recursion; [`psi_oracle`] sums over compositions directly.

mod composition;
mod map;
mod psi;
mod series;

pub use composition::{compositions, Composition};
pub use map::LinearWordMap;
pub use psi::{psi, psi_oracle, psi_word, sigma_power};
pub use series::{FormalSeries, NamedSeries};
