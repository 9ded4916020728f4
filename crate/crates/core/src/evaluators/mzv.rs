use std::fmt;
use std::str::FromStr;

use super::{interpolate, nested_sum, plain_indices, rational_coefficients, Chain};
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};
use crate::series_maps::LinearWordMap;
use crate::word_algebra::{Alphabet, NcPoly, Word};

/// Which denominators the nested sum runs over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumMode {
    /// All positive integers: multiple zeta values.
    Zeta,
    /// Odd positive integers: multiple t-values.
    TValue,
}

impl fmt::Display for SumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumMode::Zeta => "mzv",
            SumMode::TValue => "t",
        })
    }
}

impl FromStr for SumMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mzv" | "zeta" => Ok(SumMode::Zeta),
            "t" | "tval" => Ok(SumMode::TValue),
            _ => Err(Error::OutOfRange { what: "evaluator".into(), detail: s.into() }),
        }
    }
}

/// Truncated multiple zeta (or t-) values in double precision.
///
/// The sum is cut at denominators `<= cutoff`; the neglected tail is of
/// order `cutoff^{1 - i_1}` up to logarithmic factors.
#[derive(Clone, Copy, Debug)]
pub struct MzvEvaluator {
    cutoff: u64,
    mode: SumMode,
}

impl MzvEvaluator {
    pub fn new(cutoff: u64, mode: SumMode) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::OutOfRange { what: "cutoff".into(), detail: "need cutoff >= 1".into() });
        }
        Ok(MzvEvaluator { cutoff, mode })
    }

    pub fn zeta(cutoff: u64) -> Result<Self> {
        MzvEvaluator::new(cutoff, SumMode::Zeta)
    }

    pub fn t_value(cutoff: u64) -> Result<Self> {
        MzvEvaluator::new(cutoff, SumMode::TValue)
    }

    pub fn mode(&self) -> SumMode {
        self.mode
    }

    fn support(&self) -> Vec<u64> {
        match self.mode {
            SumMode::Zeta => (1..=self.cutoff).collect(),
            SumMode::TValue => (1..=self.cutoff).step_by(2).collect(),
        }
    }

    fn sum(&self, w: &Word, chain: Chain) -> Result<f64> {
        let k = plain_indices(w)?;
        if k.first() == Some(&1) {
            return Err(Error::Inadmissible { word: w.to_string(), reason: "leading exponent must be >= 2".into() });
        }
        let exps: Vec<i32> = k.iter().map(|&e| -(e as i32)).collect();
        Ok(nested_sum(k.len(), &self.support(), chain, |j, m| (m as f64).powi(exps[j])))
    }

    pub fn eval_word(&self, w: &Word) -> Result<f64> {
        self.sum(w, Chain::Strict)
    }

    /// The direct star sum over `n_1 >= ... >= n_k`; used to cross-check
    /// [`MzvEvaluator::star`].
    pub fn eval_word_star_direct(&self, w: &Word) -> Result<f64> {
        self.sum(w, Chain::Weak)
    }

    /// Linear extension; every coefficient must be rational.
    pub fn eval<R: Scalar>(&self, x: &NcPoly<R>) -> Result<f64> {
        let x = rational_coefficients(x)?;
        let mut acc = 0.0;
        for (w, c) in x.terms() {
            acc += c.to_f64() * self.eval_word(w)?;
        }
        Ok(acc)
    }

    /// Star value `ζ(Σ x)`.
    pub fn star(&self, x: &NcPoly<Rational>) -> Result<f64> {
        self.eval(&LinearWordMap::sigma(&Alphabet::Z).apply(x)?)
    }

    /// Interpolated value `ζ(Σ^r x)`, with `Σ^r` expanded symbolically in
    /// `r` before `r` is fixed.
    pub fn interp(&self, r: &Rational, x: &NcPoly<Rational>) -> Result<f64> {
        self.eval(&interpolate(r, x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn w(ix: &[u32]) -> Word {
        Word::from_indices(ix)
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn classical_values() {
        let z = MzvEvaluator::zeta(10_000).unwrap();
        assert!(close(z.eval_word(&w(&[2])).unwrap(), PI * PI / 6.0, 1e-3));
        assert!(close(z.eval_word(&w(&[3, 1])).unwrap(), PI.powi(4) / 360.0, 5e-3));
        assert_eq!(z.eval_word(&Word::empty()).unwrap(), 1.0);
        let t = MzvEvaluator::t_value(10_000).unwrap();
        assert!(close(t.eval_word(&w(&[2])).unwrap(), PI * PI / 8.0, 1e-3));
    }

    #[test]
    fn finite_cutoff_matches_enumeration() {
        let z = MzvEvaluator::zeta(30).unwrap();
        let mut strict = 0.0;
        let mut weak = 0.0;
        for n in 1..=30u64 {
            for m in 1..=n {
                let t = 1.0 / ((n * n) as f64 * m as f64);
                weak += t;
                if m < n {
                    strict += t;
                }
            }
        }
        assert!(close(z.eval_word(&w(&[2, 1])).unwrap(), strict, 1e-12));
        assert!(close(z.eval_word_star_direct(&w(&[2, 1])).unwrap(), weak, 1e-12));
        let x = NcPoly::word(w(&[2, 1]));
        assert!(close(z.star(&x).unwrap(), weak, 1e-12));
    }

    #[test]
    fn admissibility() {
        let z = MzvEvaluator::zeta(10).unwrap();
        assert!(matches!(z.eval_word(&w(&[1, 2])), Err(Error::Inadmissible { .. })));
        let sym = NcPoly::term(w(&[2]), crate::scalars::PolyScalar::var("r"));
        assert!(matches!(z.eval(&sym), Err(Error::NonRationalCoefficient(_))));
    }

    #[test]
    fn interpolation() {
        let z = MzvEvaluator::zeta(2_000).unwrap();
        let x = NcPoly::word(w(&[2, 2]));
        let half: Rational = "1/2".parse().unwrap();
        // Σ^{1/2}(z2 z2) = z2 z2 + z4/2.
        let expected = z.eval_word(&w(&[2, 2])).unwrap() + 0.5 * z.eval_word(&w(&[4])).unwrap();
        assert!(close(z.interp(&half, &x).unwrap(), expected, 1e-12));
    }
}
