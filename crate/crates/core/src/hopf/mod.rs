//! Deconcatenation coproduct, convolution of linear maps, inverse pairs,
//! antipodes and the canonical derivation.

use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};
use crate::series_maps::{FormalSeries, LinearWordMap, NamedSeries};
use crate::word_algebra::{Alphabet, NcPoly, Product, Word};

pub use crate::word_algebra::Tensor;

/// `Δ(w) = sum_{uv=w} u ⊗ v`.
pub fn deconcat<R: Scalar>(x: &NcPoly<R>) -> Tensor<R> {
    let mut out = Tensor::zero();
    for (w, c) in x.terms() {
        for (u, v) in w.splits() {
            out.add_term(u, v, c.clone());
        }
    }
    out
}

/// `Δ̃(w) = Δ(w) - w ⊗ 1 - 1 ⊗ w`, with `Δ̃(1) = 0`.
pub fn reduced_deconcat<R: Scalar>(x: &NcPoly<R>) -> Tensor<R> {
    let mut out = Tensor::zero();
    for (w, c) in x.terms() {
        for i in 1..w.len() {
            out.add_term(w.slice(0, i), w.slice(i, w.len()), c.clone());
        }
    }
    out
}

/// `(L1 ⊙ L2)(w) = sum_{uv=w} L1(u) L2(v)`.
pub fn convolve<R: Scalar>(l1: &LinearWordMap<R>, l2: &LinearWordMap<R>) -> LinearWordMap<R> {
    let (a, b) = (l1.clone(), l2.clone());
    let label = format!("{}⊙{}", a.label(), b.label());
    LinearWordMap::from_rule(label, move |w| {
        let mut out = NcPoly::zero();
        for (u, v) in w.splits() {
            let left = a.apply_word(&u)?;
            if !left.is_zero() {
                out += left.concat(&b.apply_word(&v)?);
            }
        }
        Ok(out)
    })
}

/// `sum_{uv=w} L1(u) • L2(v)` for the product `mode` in place of
/// concatenation; with `mode = *` this is the convolution of the Hopf
/// algebra `(k<A>, *, Δ)`.
pub fn convolve_product<R: Scalar>(
    alphabet: &Alphabet<R>,
    mode: Product,
    l1: &LinearWordMap<R>,
    l2: &LinearWordMap<R>,
) -> LinearWordMap<R> {
    let (a, b, alphabet) = (l1.clone(), l2.clone(), alphabet.clone());
    let label = format!("{}⊙[{mode}]{}", a.label(), b.label());
    LinearWordMap::from_rule(label, move |w| {
        let mut out = NcPoly::zero();
        for (u, v) in w.splits() {
            let left = a.apply_word(&u)?;
            if !left.is_zero() {
                out += alphabet.product(mode, &left, &b.apply_word(&v)?);
            }
        }
        Ok(out)
    })
}

/// Convolution inverse of a map with `L(1) = 1`, by induction on prefixes:
/// `inv(p_k) = -sum_{i<k} inv(p_i) L(w[i..k])`.
pub fn conv_inverse<R: Scalar>(l: &LinearWordMap<R>) -> Result<LinearWordMap<R>> {
    if l.apply_word(&Word::empty())? != NcPoly::one() {
        return Err(Error::NoConvolutionInverse);
    }
    let l = l.clone();
    let label = format!("{}^(⊙-1)", l.label());
    Ok(LinearWordMap::from_rule(label, move |w| {
        let n = w.len();
        let mut inv: Vec<NcPoly<R>> = Vec::with_capacity(n + 1);
        inv.push(NcPoly::one());
        for k in 1..=n {
            let mut acc = NcPoly::zero();
            for (i, p) in inv.iter().enumerate() {
                acc += p.concat(&l.apply_word(&w.slice(i, k))?);
            }
            inv.push(-acc);
        }
        Ok(inv.swap_remove(n))
    }))
}

/// `C_f(a_1 ... a_n) = c_n a_1 ⋄ ... ⋄ a_n`, `C_f(1) = 0`.
pub fn contraction<R: Scalar>(alphabet: &Alphabet<R>, f: FormalSeries<R>) -> LinearWordMap<R> {
    let alphabet = alphabet.clone();
    LinearWordMap::from_rule(format!("C[{f}]"), move |w| {
        if w.is_empty() {
            return Ok(NcPoly::zero());
        }
        if w.len() > f.order() {
            return Err(Error::SeriesTooShort { order: f.order(), len: w.len() });
        }
        let c = f.coeff(w.len());
        Ok(alphabet.diamond_run(w.letters()).to_poly().scale(&c))
    })
}

/// [`contraction`] for a catalog series, valid on words of any length.
pub fn contraction_named<R: Scalar>(alphabet: &Alphabet<R>, f: NamedSeries<R>) -> LinearWordMap<R> {
    let alphabet = alphabet.clone();
    LinearWordMap::from_rule(format!("C[{f}]"), move |w| {
        if w.is_empty() {
            return Ok(NcPoly::zero());
        }
        Ok(alphabet.diamond_run(w.letters()).to_poly().scale(&f.coeff(w.len())))
    })
}

/// Why a candidate inverse pair failed, and on which word.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub word: Word,
    pub reason: &'static str,
}

/// An expansion `E` and contraction `C` with `E = ηε + C ⊙ E`.
#[derive(Clone, Debug)]
pub struct InversePair<R> {
    pub expansion: LinearWordMap<R>,
    pub contraction: LinearWordMap<R>,
}

impl<R: Scalar> InversePair<R> {
    /// `(Ψ_f, C_f)` for a catalog series.
    pub fn from_series(alphabet: &Alphabet<R>, f: NamedSeries<R>) -> Self {
        InversePair {
            expansion: LinearWordMap::named(alphabet, f.clone()),
            contraction: contraction_named(alphabet, f),
        }
    }

    /// See [`is_inverse_pair`].
    pub fn check(&self, words: &[Word]) -> Result<Option<Witness>> {
        is_inverse_pair(&self.expansion, &self.contraction, words)
    }
}

/// Checks `C(1) = 0`, `E(1) = 1`, primitivity of `C(w)`, `ΔE = (E⊗E)Δ` and
/// `E(w) = (C ⊙ E)(w)` on the given words; the first failure is returned.
pub fn is_inverse_pair<R: Scalar>(
    e: &LinearWordMap<R>,
    c: &LinearWordMap<R>,
    words: &[Word],
) -> Result<Option<Witness>> {
    let one = Word::empty();
    if !c.apply_word(&one)?.is_zero() {
        return Ok(Some(Witness { word: one, reason: "C(1) != 0" }));
    }
    if e.apply_word(&one)? != NcPoly::one() {
        return Ok(Some(Witness { word: one, reason: "E(1) != 1" }));
    }
    let ce = convolve(c, e);
    for w in words.iter().filter(|w| !w.is_empty()) {
        let cw = c.apply_word(w)?;
        if !reduced_deconcat(&cw).is_zero() || !cw.constant_term().is_zero() {
            return Ok(Some(Witness { word: w.clone(), reason: "C(w) is not primitive" }));
        }
        let ew = e.apply_word(w)?;
        let lhs = deconcat(&ew);
        let rhs = deconcat(&NcPoly::word(w.clone()))
            .try_map_both(|u| e.apply_word(u), |v| e.apply_word(v))?;
        if lhs != rhs {
            return Ok(Some(Witness { word: w.clone(), reason: "E is not a coalgebra map" }));
        }
        if ew != ce.apply_word(w)? {
            return Ok(Some(Witness { word: w.clone(), reason: "E != ηε + C⊙E" }));
        }
    }
    Ok(None)
}

/// `R`: reversal of every word.
pub fn reverse<R: Scalar>(x: &NcPoly<R>) -> NcPoly<R> {
    x.map_words(Word::reversed)
}

/// Which antipode to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Antipode {
    /// `S_* = Σ T R`.
    Qsh,
    /// `S_⋆ = T Σ R`.
    Star,
    /// `S_⋄ = -Σ^{-1}`.
    Diamond,
}

impl std::str::FromStr for Antipode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "qsh" | "star" | "*" => Ok(Antipode::Qsh),
            "qsh-star" | "qsh_star" | "sstar" | "⋆" => Ok(Antipode::Star),
            "diamond" | "⋄" => Ok(Antipode::Diamond),
            _ => Err(format!("unknown antipode `{s}`")),
        }
    }
}

/// The antipode as a map.
pub fn antipode_map<R: Scalar>(alphabet: &Alphabet<R>, which: Antipode) -> LinearWordMap<R> {
    let sigma = LinearWordMap::sigma(alphabet);
    let t = LinearWordMap::t();
    let r = LinearWordMap::reverse();
    match which {
        Antipode::Qsh => LinearWordMap::chain(&[sigma, t, r]),
        Antipode::Star => LinearWordMap::chain(&[t, sigma, r]),
        Antipode::Diamond => LinearWordMap::sigma_inverse(alphabet).scale(-R::one()),
    }
}

pub fn antipode<R: Scalar>(alphabet: &Alphabet<R>, which: Antipode, x: &NcPoly<R>) -> NcPoly<R> {
    antipode_map(alphabet, which).apply(x).expect("named maps accept every word")
}

/// `D(a_1 ... a_n) = sum_{i=1}^{n-1} a_1..a_i ⋄ a_{i+1}..a_n`.
pub fn derivation_d<R: Scalar>(alphabet: &Alphabet<R>, x: &NcPoly<R>) -> NcPoly<R> {
    reduced_deconcat(x).contract(|u, v| alphabet.diamond_words(u, v))
}

/// `e^{ρD} x = sum_k ρ^k D^k x / k!`; finite because `D` shortens words.
pub fn exp_rd<R: Scalar>(alphabet: &Alphabet<R>, rho: &R, x: &NcPoly<R>) -> NcPoly<R> {
    let mut out = x.clone();
    let mut term = x.clone();
    let mut k = 0i64;
    loop {
        k += 1;
        term = derivation_d(alphabet, &term)
            .scale(rho)
            .scale(&R::from_rational(Rational::new(1, k).expect("nonzero")));
        if term.is_zero() {
            return out;
        }
        out += term.clone();
    }
}
