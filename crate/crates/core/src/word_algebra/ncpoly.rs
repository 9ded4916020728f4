use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::Zero;

use super::{Letter, Word};
use crate::error::Result;
use crate::scalars::Scalar;

fn add_into<K: Ord, R: Scalar>(map: &mut BTreeMap<K, R>, key: K, c: R) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().clone() + c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Writes `c*body` terms joined by ` + ` / ` - `; `body = None` is the unit.
pub(crate) fn write_terms<'a, R: Scalar>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Option<String>, &'a R)>,
) -> fmt::Result {
    let mut first = true;
    for (body, c) in terms {
        let (negative, mag) = c.factor_parts();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        match (mag, body) {
            (None, None) => f.write_str("1")?,
            (None, Some(b)) => f.write_str(&b)?,
            (Some(m), None) => f.write_str(&m)?,
            (Some(m), Some(b)) => write!(f, "{m}*{b}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Element of `kA`: a finite linear combination of letters.
#[derive(Clone, PartialEq, Debug)]
pub struct LinComb<R> {
    terms: BTreeMap<Letter, R>,
}

impl<R: Scalar> LinComb<R> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn letter(a: Letter) -> Self {
        LinComb::term(a, R::one())
    }

    pub fn term(a: Letter, c: R) -> Self {
        let mut out = LinComb::zero();
        out.add_term(a, c);
        out
    }

    pub fn add_term(&mut self, a: Letter, c: R) {
        add_into(&mut self.terms, a, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Letter, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Letter) -> R {
        self.terms.get(a).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            out.add_term(*a, x.clone() * c.clone());
        }
        out
    }

    pub fn to_poly(&self) -> NcPoly<R> {
        let mut out = NcPoly::zero();
        for (a, c) in &self.terms {
            out.add_term(Word::letter(*a), c.clone());
        }
        out
    }
}

impl<R: Scalar> Add for LinComb<R> {
    type Output = LinComb<R>;
    fn add(mut self, rhs: LinComb<R>) -> LinComb<R> {
        for (a, c) in rhs.terms {
            self.add_term(a, c);
        }
        self
    }
}

impl<R: Scalar> Neg for LinComb<R> {
    type Output = LinComb<R>;
    fn neg(self) -> LinComb<R> {
        LinComb { terms: self.terms.into_iter().map(|(a, c)| (a, -c)).collect() }
    }
}

impl<R: Scalar> Sub for LinComb<R> {
    type Output = LinComb<R>;
    fn sub(self, rhs: LinComb<R>) -> LinComb<R> {
        self + (-rhs)
    }
}

impl<R: Scalar> From<Letter> for LinComb<R> {
    fn from(a: Letter) -> Self {
        LinComb::letter(a)
    }
}

impl<R: Scalar> fmt::Display for LinComb<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(a, c)| (Some(a.to_string()), c)))
    }
}

/// Element of `k<A>`: a finite linear combination of words.
///
/// Terms are stored in word order (length, then lexicographic). Printing
/// lists longer words first.
#[derive(Clone, PartialEq, Debug)]
pub struct NcPoly<R> {
    terms: BTreeMap<Word, R>,
}

impl<R: Scalar> NcPoly<R> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NcPoly::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        NcPoly::term(w, R::one())
    }

    pub fn term(w: Word, c: R) -> Self {
        let mut out = NcPoly::zero();
        out.add_term(w, c);
        out
    }

    pub fn constant(c: R) -> Self {
        NcPoly::term(Word::empty(), c)
    }

    pub fn add_term(&mut self, w: Word, c: R) {
        add_into(&mut self.terms, w, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&Word::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Length of the longest word in the support (0 for constants and 0).
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Letters occurring anywhere in the support.
    pub fn letters(&self) -> BTreeSet<Letter> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).collect()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = NcPoly::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Bilinear extension of word juxtaposition.
    pub fn concat(&self, other: &NcPoly<R>) -> NcPoly<R> {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }

    /// `l * self` in concatenation, for `l` in `kA`.
    pub fn left_mul(&self, l: &LinComb<R>) -> NcPoly<R> {
        let mut out = NcPoly::zero();
        for (a, x) in l.terms() {
            for (w, c) in &self.terms {
                out.add_term(w.prepend(*a), x.clone() * c.clone());
            }
        }
        out
    }

    /// Linear extension of a word-to-word rule.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> NcPoly<R> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Linear extension of a word-to-polynomial rule.
    pub fn try_map_linear(&self, f: impl Fn(&Word) -> Result<NcPoly<R>>) -> Result<NcPoly<R>> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out += f(w)?.scale(c);
        }
        Ok(out)
    }

    /// Changes the coefficient ring term by term.
    pub fn try_map_coeffs<S: Scalar>(&self, f: impl Fn(&R) -> Result<S>) -> Result<NcPoly<S>> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Terms with words of exactly length `n`.
    pub fn homogeneous_part(&self, n: usize) -> NcPoly<R> {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<R: Scalar> AddAssign for NcPoly<R> {
    fn add_assign(&mut self, rhs: NcPoly<R>) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<R: Scalar> Add for NcPoly<R> {
    type Output = NcPoly<R>;
    fn add(mut self, rhs: NcPoly<R>) -> NcPoly<R> {
        self += rhs;
        self
    }
}

impl<R: Scalar> Neg for NcPoly<R> {
    type Output = NcPoly<R>;
    fn neg(self) -> NcPoly<R> {
        NcPoly { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<R: Scalar> Sub for NcPoly<R> {
    type Output = NcPoly<R>;
    fn sub(self, rhs: NcPoly<R>) -> NcPoly<R> {
        self + (-rhs)
    }
}

impl<R: Scalar> From<Word> for NcPoly<R> {
    fn from(w: Word) -> Self {
        NcPoly::word(w)
    }
}

impl<R: Scalar> From<&LinComb<R>> for NcPoly<R> {
    fn from(l: &LinComb<R>) -> Self {
        l.to_poly()
    }
}

impl<R: Scalar> FromIterator<(Word, R)> for NcPoly<R> {
    fn from_iter<T: IntoIterator<Item = (Word, R)>>(iter: T) -> Self {
        let mut out = NcPoly::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl<R: Scalar> Zero for NcPoly<R> {
    fn zero() -> Self {
        NcPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Scalar> fmt::Display for NcPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<(&Word, &R)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        write_terms(
            f,
            order
                .into_iter()
                .map(|(w, c)| ((!w.is_empty()).then(|| w.to_string()), c)),
        )
    }
}
