use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{nested_sum, plain_indices, rational_coefficients, Chain};
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};
use crate::word_algebra::{NcPoly, Word};

/// `A_k(n)`: sum over `n >= m_1 > ... > m_l >= 1` of `prod m_j^{-k_j}`.
pub fn harmonic(w: &Word, n: u64) -> Result<Rational> {
    sum(w, n, Chain::Strict)
}

/// `S_k(n)`: the same sum over weakly decreasing chains.
pub fn harmonic_star(w: &Word, n: u64) -> Result<Rational> {
    sum(w, n, Chain::Weak)
}

fn sum(w: &Word, n: u64, chain: Chain) -> Result<Rational> {
    let k = plain_indices(w)?;
    let support: Vec<u64> = (1..=n).collect();
    let powers: Vec<Vec<Rational>> = k
        .iter()
        .map(|&e| support.iter().map(|&m| Rational::new(1, m).expect("m >= 1").pow(e)).collect())
        .collect();
    Ok(nested_sum(k.len(), &support, chain, |j, m| powers[j][(m - 1) as usize].clone()))
}

/// Unsigned Stirling number of the first kind: permutations of `n`
/// elements with `k` cycles.
pub fn stirling_first(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::OutOfRange { what: "k".into(), detail: format!("need k <= n, got k = {k}, n = {n}") });
    }
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for (j, x) in row.iter().enumerate() {
            next[j + 1] += x;
            next[j] += x * BigUint::from(m - 1);
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// `ζ_{<=n}` and `ζ*_{<=n}` extended linearly to polynomials.
#[derive(Clone, Copy, Debug)]
pub struct HarmonicEvaluator {
    n: u64,
}

impl HarmonicEvaluator {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange { what: "n".into(), detail: "need n >= 1".into() });
        }
        Ok(HarmonicEvaluator { n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn eval<R: Scalar>(&self, x: &NcPoly<R>) -> Result<Rational> {
        self.linear(x, harmonic)
    }

    pub fn eval_star<R: Scalar>(&self, x: &NcPoly<R>) -> Result<Rational> {
        self.linear(x, harmonic_star)
    }

    fn linear<R: Scalar>(&self, x: &NcPoly<R>, f: fn(&Word, u64) -> Result<Rational>) -> Result<Rational> {
        let x = rational_coefficients(x)?;
        let mut acc = Rational::zero();
        for (w, c) in x.terms() {
            acc = acc + c.clone() * f(w, self.n)?;
        }
        Ok(acc)
    }
}
