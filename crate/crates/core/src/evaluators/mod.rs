//! Homomorphic images of the quasi-shuffle algebras: finite harmonic
//! sums, truncated multiple q-zeta series, numeric multiple zeta and
//! t-values, polylogarithms at roots of unity, and the word families
//! `S(k,l)` and `e(2n,k)` used with them.
//!
//! Every evaluator reduces to one nested sum over index chains
//! `m_1 > m_2 > ... > m_l` (or `>=`), computed level by level with running
//! prefix sums rather than by enumerating chains.

mod harmonic;
mod mzv;
mod polylog;
mod qzeta;
mod words;

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

pub use harmonic::{harmonic, harmonic_star, stirling_first, HarmonicEvaluator};
pub use mzv::{MzvEvaluator, SumMode};
pub use polylog::PolylogEvaluator;
pub use qzeta::{to_qseries, QZetaEvaluator};
pub use words::{even_comp_sum, sum_words};

use crate::error::{Error, Result};
use crate::scalars::{PolyScalar, Rational, Scalar};
use crate::word_algebra::{NcPoly, Word};

/// Chain ordering for a nested sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Chain {
    Strict,
    Weak,
}

/// `sum over m_1 (>|>=) ... (>|>=) m_depth` drawn from the increasing
/// `support` of `prod_j term(j, m_j)`.
pub(crate) fn nested_sum<T, F>(depth: usize, support: &[u64], chain: Chain, term: F) -> T
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
    F: Fn(usize, u64) -> T,
{
    if depth == 0 {
        return T::one();
    }
    // After processing level j, `inner[idx]` is the sum over chains for
    // levels j.. with m_j <= support[idx].
    let mut inner: Vec<T> = Vec::new();
    for j in (0..depth).rev() {
        let mut cum = T::zero();
        let mut next = Vec::with_capacity(support.len());
        for (idx, &m) in support.iter().enumerate() {
            let deeper = if j == depth - 1 {
                T::one()
            } else {
                match chain {
                    Chain::Strict if idx == 0 => T::zero(),
                    Chain::Strict => inner[idx - 1].clone(),
                    Chain::Weak => inner[idx].clone(),
                }
            };
            if !deeper.is_zero() {
                cum = cum + term(j, m) * deeper;
            }
            next.push(cum.clone());
        }
        inner = next;
    }
    inner.last().cloned().unwrap_or_else(T::zero)
}

/// Rejects letters of the Euler alphabet and index 0.
pub(crate) fn plain_indices(w: &Word) -> Result<Vec<u32>> {
    w.letters()
        .iter()
        .map(|a| match a.color {
            None if a.index >= 1 => Ok(a.index),
            _ => Err(Error::Inadmissible { word: w.to_string(), reason: format!("letter {a} is not z_i, i >= 1") }),
        })
        .collect()
}

/// Rational coefficients of `x`, or the first non-constant one.
pub(crate) fn rational_coefficients<R: Scalar>(x: &NcPoly<R>) -> Result<NcPoly<Rational>> {
    x.try_map_coeffs(|c| c.as_rational().ok_or_else(|| Error::NonRationalCoefficient(c.to_string())))
}

/// `Σ^r x` computed with `r` symbolic, then specialized to `r = rho`.
pub(crate) fn interpolate(rho: &Rational, x: &NcPoly<Rational>) -> Result<NcPoly<Rational>> {
    let symbolic = x.try_map_coeffs(|c| Ok(PolyScalar::constant(c.clone())))?;
    let sigma_r = crate::series_maps::sigma_power(&crate::Alphabet::Z, &PolyScalar::var("r"), &symbolic);
    let bindings = [("r".to_string(), rho.clone())].into_iter().collect();
    sigma_r.try_map_coeffs(|c| c.substitute(&bindings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_sum_counts_chains() {
        let support: Vec<u64> = (1..=5).collect();
        // Number of strict 3-chains in {1..5} is C(5,3); weak chains C(7,3).
        let strict: u64 = nested_sum(3, &support, Chain::Strict, |_, _| 1u64);
        let weak: u64 = nested_sum(3, &support, Chain::Weak, |_, _| 1u64);
        assert_eq!((strict, weak), (10, 35));
        let empty: u64 = nested_sum(0, &support, Chain::Strict, |_, _| 7);
        assert_eq!(empty, 1);
        let too_deep: u64 = nested_sum(6, &support, Chain::Strict, |_, _| 1);
        assert_eq!(too_deep, 0);
    }

    #[test]
    fn interpolation_endpoints() {
        let w = NcPoly::word(Word::from_indices(&[2, 1]));
        assert_eq!(interpolate(&Rational::from(0), &w).unwrap(), w);
        let star = w.clone() + NcPoly::word(Word::from_indices(&[3]));
        assert_eq!(interpolate(&Rational::from(1), &w).unwrap(), star);
    }
}
