use super::{nested_sum, plain_indices, Chain};
use crate::error::{Error, Result};
use crate::scalars::{PolyScalar, QSeries, Scalar};
use crate::series_maps::LinearWordMap;
use crate::word_algebra::{Alphabet, NcPoly, Word};

/// Multiple q-zeta values as exact series modulo `q^(M+1)`.
///
/// Words must lie in `H_q^0`: the first letter has index at least 2.
/// Since the outer summand then has q-valuation at least `m_1`, the outer
/// index runs over `1..=M` only.
#[derive(Clone, Copy, Debug)]
pub struct QZetaEvaluator {
    order: usize,
}

impl QZetaEvaluator {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(QZetaEvaluator { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The `q` alphabet over `Q[[q]]` at this truncation.
    pub fn alphabet(&self) -> Alphabet<QSeries> {
        Alphabet::q_series()
    }

    /// `q^{m(k-1)} / [m]^k = q^{m(k-1)} (1-q)^k / (1-q^m)^k`.
    fn term(&self, k: u32, m: u64) -> QSeries {
        let m = m as usize;
        let shift = m * (k as usize - 1);
        if shift > self.order {
            return QSeries::truncated(Vec::new(), self.order);
        }
        QSeries::q_power(shift, self.order)
            * QSeries::one_minus_q().pow(k)
            * QSeries::inverse_one_minus_q_power(m, k, self.order)
    }

    fn sum(&self, w: &Word, chain: Chain) -> Result<QSeries> {
        let k = plain_indices(w)?;
        if let Some(&first) = k.first() {
            if first < 2 {
                return Err(Error::Inadmissible { word: w.to_string(), reason: "q-zeta needs a first index >= 2".into() });
            }
        }
        let support: Vec<u64> = (1..=self.order as u64).collect();
        let table: Vec<Vec<QSeries>> =
            k.iter().map(|&e| support.iter().map(|&m| self.term(e, m)).collect()).collect();
        let value = nested_sum(k.len(), &support, chain, |j, m| table[j][(m - 1) as usize].clone());
        value.truncate_to(self.order)
    }

    /// `ζ_q(w)`: sum over `m_1 > ... > m_l >= 1`.
    pub fn qzeta(&self, w: &Word) -> Result<QSeries> {
        self.sum(w, Chain::Strict)
    }

    /// `ζ_q^⋆(w)`: sum over `m_1 >= ... >= m_l >= 1`.
    pub fn qzeta_star(&self, w: &Word) -> Result<QSeries> {
        self.sum(w, Chain::Weak)
    }

    /// `ζ_q` extended linearly; coefficients are elements of `Q[[q]]`.
    pub fn eval(&self, x: &NcPoly<QSeries>) -> Result<QSeries> {
        let mut acc = QSeries::truncated(Vec::new(), self.order);
        for (w, c) in x.terms() {
            acc = acc.try_add(&c.try_mul(&self.qzeta(w)?)?)?;
        }
        Ok(acc)
    }

    pub fn eval_star(&self, x: &NcPoly<QSeries>) -> Result<QSeries> {
        let mut acc = QSeries::truncated(Vec::new(), self.order);
        for (w, c) in x.terms() {
            acc = acc.try_add(&c.try_mul(&self.qzeta_star(w)?)?)?;
        }
        Ok(acc)
    }

    /// `ζ_q` of a polynomial over `Q[eps]`, with `eps = 1 - q`.
    pub fn eval_symbolic(&self, x: &NcPoly<PolyScalar>) -> Result<QSeries> {
        self.eval(&to_qseries(x)?)
    }

    /// `ζ_q(Σ w)`, the star value through the map `Σ` of the `q` alphabet.
    pub fn qzeta_star_via_sigma(&self, w: &Word) -> Result<QSeries> {
        let sigma = LinearWordMap::sigma(&self.alphabet());
        self.eval(&sigma.apply_word(w)?)
    }
}

/// Sends `eps` to `1 - q`; any other variable is an error.
pub fn to_qseries(x: &NcPoly<PolyScalar>) -> Result<NcPoly<QSeries>> {
    x.try_map_coeffs(|c| c.eval_with(|v| (v == "eps").then(QSeries::one_minus_q)))
}
