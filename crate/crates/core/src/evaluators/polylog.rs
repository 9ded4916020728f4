use num_complex::Complex64;
use num_traits::Zero;

use super::{nested_sum, Chain};
use crate::error::{Error, Result};
use crate::scalars::{NumericScalar, Scalar};
use crate::word_algebra::{Alphabet, NcPoly, Word};

/// Multiple polylogarithms at `r`-th roots of unity, on words over the
/// Euler alphabet: `z_{i,j}` contributes `ω^{n j} / n^i`.
#[derive(Clone, Debug)]
pub struct PolylogEvaluator {
    r: u32,
    cutoff: u64,
    roots: Vec<Complex64>,
}

impl PolylogEvaluator {
    pub fn new(r: u32, cutoff: u64) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidRootOrder(r));
        }
        if cutoff == 0 {
            return Err(Error::OutOfRange { what: "cutoff".into(), detail: "need cutoff >= 1".into() });
        }
        let roots = (0..r)
            .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / r as f64))
            .collect();
        Ok(PolylogEvaluator { r, cutoff, roots })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn alphabet<R>(&self) -> Alphabet<R> {
        Alphabet::Euler { r: self.r }
    }

    fn sum(&self, w: &Word, chain: Chain) -> Result<NumericScalar> {
        let alphabet: Alphabet<crate::Rational> = self.alphabet();
        alphabet.validate_word(w)?;
        let letters = w.letters();
        if let Some(a) = letters.first() {
            if a.index == 1 && a.color == Some(0) {
                return Err(Error::Inadmissible { word: w.to_string(), reason: "leading letter z1,0 diverges".into() });
            }
        }
        let support: Vec<u64> = (1..=self.cutoff).collect();
        let r = self.r as u64;
        Ok(nested_sum(letters.len(), &support, chain, |j, n| {
            let a = letters[j];
            let phase = self.roots[((n * a.color.unwrap_or(0) as u64) % r) as usize];
            phase * (n as f64).powi(-(a.index as i32))
        }))
    }

    /// `Li_I(ω^{j_1}, ..., ω^{j_k})` over `n_1 > ... > n_k`.
    pub fn polylog(&self, w: &Word) -> Result<NumericScalar> {
        self.sum(w, Chain::Strict)
    }

    /// Star version over `n_1 >= ... >= n_k`.
    pub fn polylog_star(&self, w: &Word) -> Result<NumericScalar> {
        self.sum(w, Chain::Weak)
    }

    pub fn eval<R: Scalar>(&self, x: &NcPoly<R>) -> Result<NumericScalar> {
        let x = super::rational_coefficients(x)?;
        let mut acc = Complex64::zero();
        for (w, c) in x.terms() {
            acc += self.polylog(w)? * c.to_f64();
        }
        Ok(acc)
    }

    pub fn eval_star<R: Scalar>(&self, x: &NcPoly<R>) -> Result<NumericScalar> {
        let x = super::rational_coefficients(x)?;
        let mut acc = Complex64::zero();
        for (w, c) in x.terms() {
            acc += self.polylog_star(w)? * c.to_f64();
        }
        Ok(acc)
    }
}
