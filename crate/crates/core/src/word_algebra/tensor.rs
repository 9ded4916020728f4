use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use super::ncpoly::write_terms;
use super::{NcPoly, Word};
use crate::error::Result;
use crate::scalars::Scalar;

/// Element of `k<A> ⊗ k<A>`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<R> {
    terms: BTreeMap<(Word, Word), R>,
}

impl<R: Scalar> Tensor<R> {
    pub fn zero() -> Self {
        Tensor { terms: BTreeMap::new() }
    }

    pub fn pure(u: Word, v: Word) -> Self {
        let mut t = Tensor::zero();
        t.add_term(u, v, R::one());
        t
    }

    /// `x ⊗ y`.
    pub fn outer(x: &NcPoly<R>, y: &NcPoly<R>) -> Self {
        let mut t = Tensor::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                t.add_term(u.clone(), v.clone(), a.clone() * b.clone());
            }
        }
        t
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Word, v: &Word) -> R {
        self.terms.get(&(u.clone(), v.clone())).cloned().unwrap_or_else(R::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut t = Tensor::zero();
        for ((u, v), x) in &self.terms {
            t.add_term(u.clone(), v.clone(), x.clone() * c.clone());
        }
        t
    }

    /// `(f ⊗ g)` applied termwise.
    pub fn try_map_both(
        &self,
        f: impl Fn(&Word) -> Result<NcPoly<R>>,
        g: impl Fn(&Word) -> Result<NcPoly<R>>,
    ) -> Result<Self> {
        let mut out = Tensor::zero();
        for ((u, v), c) in &self.terms {
            out += Tensor::outer(&f(u)?, &g(v)?).scale(c);
        }
        Ok(out)
    }

    /// Applies a bilinear product `m(u, v)` to every term.
    pub fn contract(&self, m: impl Fn(&Word, &Word) -> NcPoly<R>) -> NcPoly<R> {
        let mut out = NcPoly::zero();
        for ((u, v), c) in &self.terms {
            out += m(u, v).scale(c);
        }
        out
    }
}

impl<R: Scalar> AddAssign for Tensor<R> {
    fn add_assign(&mut self, rhs: Tensor<R>) {
        for ((u, v), c) in rhs.terms {
            self.add_term(u, v, c);
        }
    }
}

impl<R: Scalar> Add for Tensor<R> {
    type Output = Tensor<R>;
    fn add(mut self, rhs: Tensor<R>) -> Tensor<R> {
        self += rhs;
        self
    }
}

impl<R: Scalar> Neg for Tensor<R> {
    type Output = Tensor<R>;
    fn neg(self) -> Tensor<R> {
        Tensor { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<R: Scalar> Sub for Tensor<R> {
    type Output = Tensor<R>;
    fn sub(self, rhs: Tensor<R>) -> Tensor<R> {
        self + (-rhs)
    }
}

impl<R: Scalar> fmt::Display for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|((u, v), c)| (Some(format!("{u} ⊗ {v}")), c)))
    }
}
