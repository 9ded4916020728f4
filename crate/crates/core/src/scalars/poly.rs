use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Variable name to rational value.
pub type Bindings = BTreeMap<String, Rational>;

/// Fixed variable order: the named parameters `p, r, s, eps` first, then any
/// other name alphabetically.
fn var_key(name: &str) -> (u8, &str) {
    let rank = match name {
        "p" => 0,
        "r" => 1,
        "s" => 2,
        "eps" => 3,
        _ => 4,
    };
    (rank, name)
}

/// A power product of named variables, stored in the fixed variable order
/// with positive exponents only.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Ord for Monomial {
    /// Lexicographic on exponent vectors over the fixed variable order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(a), Some(b)) => match var_key(&a.0).cmp(&var_key(&b.0)) {
                    // `self` has a variable `other` lacks at this position.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match a.1.cmp(&b.1) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, e)| (v.as_ref(), *e))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: Vec<(Arc<str>, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (&self.0[i], &other.0[j]);
            match var_key(&a.0).cmp(&var_key(&b.0)) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with rational coefficients in named parameters such as the
/// interpolation parameter `r` or `eps = 1 - q`.
///
/// Canonical form: no zero coefficients, monomials in lexicographic order
/// over the fixed variable list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyScalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyScalar {
    pub fn var(name: &str) -> Self {
        PolyScalar::monomial(Monomial::var(name), Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        PolyScalar::monomial(Monomial::one(), q)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyScalar { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Variables that occur with a nonzero coefficient.
    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v.to_string()))
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Rejects polynomials using a variable outside `declared`.
    pub fn ensure_vars<S: AsRef<str>>(&self, declared: &[S]) -> Result<()> {
        for v in self.variables() {
            if !declared.iter().any(|d| d.as_ref() == v) {
                return Err(Error::UndeclaredVariable(v));
            }
        }
        Ok(())
    }

    /// Value of the polynomial at `bindings`; every occurring variable must
    /// be bound.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Rational> {
        self.eval_with(|v| bindings.get(v).cloned())
    }

    /// Evaluates in any coefficient ring, sending each variable through
    /// `value`. This is the ring homomorphism `Q[vars] -> R` determined by
    /// the images of the variables.
    pub fn eval_with<R: Scalar>(&self, value: impl Fn(&str) -> Option<R>) -> Result<R> {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut term = R::from_rational(c.clone());
            for (v, e) in m.factors() {
                let x = value(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                term = term * x.pow(e);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Substitutes the bound variables and keeps the others symbolic.
    pub fn specialize(&self, bindings: &Bindings) -> PolyScalar {
        self.eval_with(|v| {
            Some(match bindings.get(v) {
                Some(q) => PolyScalar::constant(q.clone()),
                None => PolyScalar::var(v),
            })
        })
        .expect("every variable has an image")
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Terms in printing order: higher total degree first.
    fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        v
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational) -> fmt::Result {
    let mag = c.abs();
    match (m.is_one(), mag.is_one()) {
        (true, _) => write!(f, "{mag}"),
        (false, true) => write!(f, "{m}"),
        (false, false) => write!(f, "{mag}*{m}"),
    }
}

impl fmt::Display for PolyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term(f, m, c)?;
        }
        Ok(())
    }
}

impl Zero for PolyScalar {
    fn zero() -> Self {
        PolyScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PolyScalar {
    fn one() -> Self {
        PolyScalar::constant(Rational::one())
    }
}

impl Add for PolyScalar {
    type Output = PolyScalar;
    fn add(mut self, rhs: PolyScalar) -> PolyScalar {
        for (m, c) in rhs.terms {
            PolyScalar::insert_add(&mut self.terms, m, c);
        }
        self
    }
}

impl Sub for PolyScalar {
    type Output = PolyScalar;
    fn sub(self, rhs: PolyScalar) -> PolyScalar {
        self + (-rhs)
    }
}

impl Neg for PolyScalar {
    type Output = PolyScalar;
    fn neg(self) -> PolyScalar {
        PolyScalar {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for PolyScalar {
    type Output = PolyScalar;
    fn mul(self, rhs: PolyScalar) -> PolyScalar {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                PolyScalar::insert_add(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        PolyScalar { terms }
    }
}

impl From<Rational> for PolyScalar {
    fn from(q: Rational) -> Self {
        PolyScalar::constant(q)
    }
}

impl Scalar for PolyScalar {
    fn from_rational(q: Rational) -> Self {
        PolyScalar::constant(q)
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn try_inverse(&self) -> Option<Self> {
        self.as_rational()?.recip().ok().map(PolyScalar::constant)
    }

    fn factor_parts(&self) -> (bool, Option<String>) {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            let magnitude = PolyScalar::monomial(m.clone(), c.abs());
            let text = if magnitude.is_one() { None } else { Some(magnitude.to_string()) };
            (c.is_negative(), text)
        } else {
            (false, Some(format!("({self})")))
        }
    }
}
