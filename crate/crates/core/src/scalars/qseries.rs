use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Element of `Q[[q]]`, either truncated modulo `q^(M+1)` or an exact
/// polynomial in `q`.
///
/// Exact polynomials (constants, `1 - q`) adapt to the order of whatever
/// truncated series they meet. Two truncated series of different orders do
/// not combine: operators panic and the `try_*` methods return
/// [`Error::OrderMismatch`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSeries {
    /// `coeffs[i]` is the coefficient of `q^i`; trailing zeros trimmed.
    coeffs: Vec<Rational>,
    order: Option<usize>,
}

impl QSeries {
    /// Series truncated at order `m`: coefficients beyond `q^m` are dropped.
    pub fn truncated(mut coeffs: Vec<Rational>, m: usize) -> Self {
        coeffs.truncate(m + 1);
        QSeries::trimmed(coeffs, Some(m))
    }

    pub fn exact(coeffs: Vec<Rational>) -> Self {
        QSeries::trimmed(coeffs, None)
    }

    fn trimmed(mut coeffs: Vec<Rational>, order: Option<usize>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QSeries { coeffs, order }
    }

    pub fn constant(c: Rational) -> Self {
        QSeries::exact(vec![c])
    }

    /// The exact polynomial `1 - q`.
    pub fn one_minus_q() -> Self {
        QSeries::exact(vec![Rational::one(), -Rational::one()])
    }

    /// `q^k` truncated at order `m`.
    pub fn q_power(k: usize, m: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        QSeries::truncated(coeffs, m)
    }

    /// `1 / (1 - q^step)^k` truncated at order `m`, by the negative binomial
    /// series `sum_j binom(j + k - 1, k - 1) q^(step j)`.
    pub fn inverse_one_minus_q_power(step: usize, k: u32, m: usize) -> Self {
        assert!(step >= 1, "q-power step must be positive");
        let mut coeffs = vec![Rational::zero(); m + 1];
        let mut binom = Rational::one();
        let mut j = 0usize;
        while j * step <= m {
            coeffs[j * step] = binom.clone();
            j += 1;
            // binom(j + k - 1, k - 1) from binom(j + k - 2, k - 1)
            binom = binom * Rational::from((j + k as usize - 1) as i64)
                / Rational::from(j as i64);
        }
        QSeries::truncated(coeffs, m)
    }

    /// `None` for an exact polynomial.
    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients `c_0 ..= c_M` (or up to the degree for exact series).
    pub fn coefficients(&self) -> Vec<Rational> {
        let len = match self.order {
            Some(m) => m + 1,
            None => self.coeffs.len(),
        };
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// Reinterprets as a series truncated at `m`. Lowering the order of a
    /// truncated series is allowed; raising it is not.
    pub fn truncate_to(&self, m: usize) -> Result<Self> {
        match self.order {
            Some(own) if own < m => Err(Error::OrderMismatch { left: own, right: m }),
            _ => Ok(QSeries::truncated(self.coeffs.clone(), m)),
        }
    }

    fn common_order(&self, other: &QSeries) -> Result<Option<usize>> {
        match (self.order, other.order) {
            (Some(a), Some(b)) if a != b => Err(Error::OrderMismatch { left: a, right: b }),
            (Some(a), _) | (_, Some(a)) => Ok(Some(a)),
            (None, None) => Ok(None),
        }
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        let order = self.common_order(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(QSeries::reduce(coeffs, order))
    }

    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries> {
        let order = self.common_order(other)?;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(QSeries::reduce(Vec::new(), order));
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(m) = order {
            len = len.min(m + 1);
        }
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(QSeries::reduce(coeffs, order))
    }

    fn reduce(coeffs: Vec<Rational>, order: Option<usize>) -> QSeries {
        match order {
            Some(m) => QSeries::truncated(coeffs, m),
            None => QSeries::exact(coeffs),
        }
    }
}

impl fmt::Display for QSeries {
    /// `c0 + c1*q + ... + cM*q^M`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(&power)?,
                (_, false) => write!(f, "{mag}*{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries::exact(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QSeries {
    fn one() -> Self {
        QSeries::constant(Rational::one())
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        self.try_add(&rhs).expect("QSeries addition across truncation orders")
    }
}

impl Sub for QSeries {
    type Output = QSeries;
    fn sub(self, rhs: QSeries) -> QSeries {
        self.try_add(&-rhs).expect("QSeries subtraction across truncation orders")
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        self.try_mul(&rhs).expect("QSeries product across truncation orders")
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl Scalar for QSeries {
    fn from_rational(q: Rational) -> Self {
        QSeries::constant(q)
    }

    fn as_rational(&self) -> Option<Rational> {
        (self.coeffs.len() <= 1).then(|| self.coeff(0))
    }

    fn try_inverse(&self) -> Option<Self> {
        let c0 = self.coeff(0).recip().ok()?;
        match self.order {
            None => (self.coeffs.len() == 1).then(|| QSeries::constant(c0)),
            Some(m) => {
                let mut inv = vec![Rational::zero(); m + 1];
                inv[0] = c0.clone();
                for n in 1..=m {
                    let mut s = Rational::zero();
                    for k in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                        s = s + &self.coeffs[k] * &inv[n - k];
                    }
                    inv[n] = -(s * c0.clone());
                }
                Some(QSeries::truncated(inv, m))
            }
        }
    }

    fn factor_parts(&self) -> (bool, Option<String>) {
        let nonzero: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect();
        if nonzero.len() == 1 {
            let i = nonzero[0];
            let c = &self.coeffs[i];
            let mut coeffs = vec![Rational::zero(); i + 1];
            coeffs[i] = c.abs();
            let mag = QSeries::exact(coeffs);
            let text = if mag.is_one() { None } else { Some(mag.to_string()) };
            (c.is_negative(), text)
        } else {
            (false, Some(format!("({self})")))
        }
    }
}
