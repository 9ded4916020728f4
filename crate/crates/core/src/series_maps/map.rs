use std::fmt;
use std::sync::{Arc, Mutex};

use super::{psi_word, FormalSeries, NamedSeries};
use crate::error::Result;
use crate::scalars::Scalar;
use crate::word_algebra::{Alphabet, NcPoly, Word};

type Rule<R> = dyn Fn(&Word) -> Result<NcPoly<R>> + Send + Sync;

/// A linear map `k<A> -> k<A>` given by its values on words.
///
/// Maps compare only extensionally, by evaluating them on a finite set of
/// words; there is no structural equality.
#[derive(Clone)]
pub struct LinearWordMap<R> {
    rule: Arc<Rule<R>>,
    label: Arc<str>,
}

impl<R> fmt::Debug for LinearWordMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearWordMap({})", self.label)
    }
}

/// Coefficients of a named series, computed on demand and kept.
struct CoeffCache<R> {
    series: NamedSeries<R>,
    coeffs: Mutex<Vec<R>>,
}

impl<R: Scalar> CoeffCache<R> {
    fn series(&self, order: usize) -> FormalSeries<R> {
        let mut coeffs = self.coeffs.lock().expect("coefficient cache poisoned");
        while coeffs.len() < order {
            let i = coeffs.len() + 1;
            coeffs.push(self.series.coeff(i));
        }
        FormalSeries::new(coeffs[..order].to_vec()).expect("order is positive")
    }
}

impl<R: Scalar> LinearWordMap<R> {
    pub fn from_rule(
        label: impl Into<String>,
        rule: impl Fn(&Word) -> Result<NcPoly<R>> + Send + Sync + 'static,
    ) -> Self {
        LinearWordMap { rule: Arc::new(rule), label: label.into().into() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity() -> Self {
        LinearWordMap::from_rule("id", |w| Ok(NcPoly::word(w.clone())))
    }

    /// `ηε`: `1 -> 1`, every nonempty word to 0.
    pub fn unit_counit() -> Self {
        LinearWordMap::from_rule("ηε", |w| {
            Ok(if w.is_empty() { NcPoly::one() } else { NcPoly::zero() })
        })
    }

    pub fn zero() -> Self {
        LinearWordMap::from_rule("0", |_| Ok(NcPoly::zero()))
    }

    /// `R`: word reversal.
    pub fn reverse() -> Self {
        LinearWordMap::from_rule("R", |w| Ok(NcPoly::word(w.reversed())))
    }

    /// `Ψ_f` for a fixed truncated series; longer words are an error.
    pub fn psi(alphabet: &Alphabet<R>, f: FormalSeries<R>) -> Self {
        let alphabet = alphabet.clone();
        LinearWordMap::from_rule(format!("Ψ[{f}]"), move |w| psi_word(&alphabet, &f, w))
    }

    /// `Ψ_f` for a catalog series, expanded as far as each word needs.
    pub fn named(alphabet: &Alphabet<R>, series: NamedSeries<R>) -> Self {
        let alphabet = alphabet.clone();
        let label = format!("Ψ[{series}]");
        let cache = CoeffCache { series, coeffs: Mutex::new(Vec::new()) };
        LinearWordMap::from_rule(label, move |w| {
            psi_word(&alphabet, &cache.series(w.len().max(1)), w)
        })
    }

    /// `T = Ψ_{-t}`.
    pub fn t() -> Self {
        LinearWordMap::from_rule("T", |w| {
            let x = NcPoly::word(w.clone());
            Ok(if w.len() % 2 == 1 { -x } else { x })
        })
    }

    /// `Σ = Ψ_{t/(1-t)}`.
    pub fn sigma(alphabet: &Alphabet<R>) -> Self {
        LinearWordMap::named(alphabet, NamedSeries::Sigma)
    }

    /// `Σ^{-1} = Ψ_{t/(1+t)}`.
    pub fn sigma_inverse(alphabet: &Alphabet<R>) -> Self {
        LinearWordMap::named(alphabet, NamedSeries::SigmaInverse)
    }

    /// `Σ^ρ = Ψ_{t/(1-ρt)}`.
    pub fn sigma_power(alphabet: &Alphabet<R>, rho: R) -> Self {
        LinearWordMap::named(alphabet, NamedSeries::SigmaPower(rho))
    }

    /// `exp = Ψ_{e^t-1}`.
    pub fn exp(alphabet: &Alphabet<R>) -> Self {
        LinearWordMap::named(alphabet, NamedSeries::Exp)
    }

    /// `log = Ψ_{log(1+t)}`.
    pub fn log(alphabet: &Alphabet<R>) -> Self {
        LinearWordMap::named(alphabet, NamedSeries::Log)
    }

    /// `H_p = Ψ_{(1+t)^p-1}`.
    pub fn hp(alphabet: &Alphabet<R>, p: R) -> Self {
        LinearWordMap::named(alphabet, NamedSeries::Hp(p))
    }

    pub fn apply_word(&self, w: &Word) -> Result<NcPoly<R>> {
        (self.rule)(w)
    }

    pub fn apply(&self, x: &NcPoly<R>) -> Result<NcPoly<R>> {
        x.try_map_linear(|w| self.apply_word(w))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &LinearWordMap<R>) -> Self {
        let (outer, inner) = (self.clone(), inner.clone());
        let label = format!("{}∘{}", outer.label, inner.label);
        LinearWordMap::from_rule(label, move |w| outer.apply(&inner.apply_word(w)?))
    }

    /// Composite of a pipeline, rightmost applied first.
    pub fn chain(maps: &[LinearWordMap<R>]) -> Self {
        maps.iter()
            .fold(LinearWordMap::identity(), |acc, m| acc.compose(m))
    }

    pub fn add(&self, other: &LinearWordMap<R>) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let label = format!("({} + {})", a.label, b.label);
        LinearWordMap::from_rule(label, move |w| Ok(a.apply_word(w)? + b.apply_word(w)?))
    }

    pub fn sub(&self, other: &LinearWordMap<R>) -> Self {
        self.add(&other.scale(-R::one()))
    }

    pub fn scale(&self, c: R) -> Self {
        let a = self.clone();
        let label = format!("{c}·{}", a.label);
        LinearWordMap::from_rule(label, move |w| Ok(a.apply_word(w)?.scale(&c)))
    }

    /// First word of `words` on which the two maps differ.
    pub fn first_disagreement<'a>(
        &self,
        other: &LinearWordMap<R>,
        words: impl IntoIterator<Item = &'a Word>,
    ) -> Result<Option<Word>> {
        for w in words {
            if self.apply_word(w)? != other.apply_word(w)? {
                return Ok(Some(w.clone()));
            }
        }
        Ok(None)
    }
}
