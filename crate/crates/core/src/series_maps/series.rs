use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{binomial, Rational, Scalar};

/// `c_1 t + c_2 t^2 + ... + c_N t^N`, truncated mod `t^(N+1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Scalar> FormalSeries<R> {
    /// From `[c_1, ..., c_N]`; `N = coeffs.len()` must be at least 1.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(FormalSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Result<Self> {
        FormalSeries::new((1..=order).map(f).collect())
    }

    /// The identity series `t`.
    pub fn identity(order: usize) -> Result<Self> {
        FormalSeries::from_fn(order, |i| if i == 1 { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `[t^i] f`, zero for `i = 0` and beyond the truncation.
    pub fn coeff(&self, i: usize) -> R {
        if i == 0 {
            return R::zero();
        }
        self.coeffs.get(i - 1).cloned().unwrap_or_else(R::zero)
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    /// Truncation to a lower order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: order });
        }
        FormalSeries::new(self.coeffs[..order].to_vec())
    }

    /// Coefficients `[t^0], ..., [t^N]` of `g^j` (g has no constant term).
    fn power_table(g: &FormalSeries<R>, n: usize) -> Vec<Vec<R>> {
        // table[j][k] = [t^k] g^j
        let mut table = vec![vec![R::zero(); n + 1]; n + 1];
        table[0][0] = R::one();
        for j in 1..=n {
            for k in j..=n {
                let mut s = R::zero();
                for a in 1..=k - (j - 1) {
                    let prev = &table[j - 1][k - a];
                    if !prev.is_zero() {
                        s = s + g.coeff(a) * prev.clone();
                    }
                }
                table[j][k] = s;
            }
        }
        table
    }

    /// `f ∘ g`: `[t^k] = sum_j c_j [t^k] g^j`.
    pub fn compose(&self, g: &FormalSeries<R>) -> Result<Self> {
        if self.order() != g.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: g.order() });
        }
        let n = self.order();
        let table = FormalSeries::power_table(g, n);
        FormalSeries::from_fn(n, |k| {
            (1..=k).fold(R::zero(), |acc, j| acc + self.coeff(j) * table[j][k].clone())
        })
    }

    /// Compositional inverse, solved one coefficient at a time.
    pub fn inverse(&self) -> Result<Self> {
        let inv1 = self.coeff(1).try_inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut g = vec![R::zero(); n];
        g[0] = inv1.clone();
        for k in 2..=n {
            // [t^k] f∘g is c_1 g_k plus terms in g_1..g_{k-1}; g_k = 0 for now.
            let partial = FormalSeries::new(g.clone())?;
            let residual = self.compose(&partial)?.coeff(k);
            g[k - 1] = -(residual * inv1.clone());
        }
        FormalSeries::new(g)
    }

    /// `f(-t)`.
    pub fn negate_argument(&self) -> Self {
        FormalSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| {
            if k == 0 {
                c.is_one()
            } else {
                c.is_zero()
            }
        })
    }
}

impl<R: Scalar> fmt::Display for FormalSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let body = if k == 0 { "t".to_string() } else { format!("t^{}", k + 1) };
            (Some(body), c)
        });
        crate::word_algebra::write_terms(f, terms)
    }
}

/// The catalog of series used to build maps.
#[derive(Clone, PartialEq, Debug)]
pub enum NamedSeries<R> {
    /// `t`
    Identity,
    /// `-t`
    Negation,
    /// `t/(1-t)`
    Sigma,
    /// `t/(1+t)`
    SigmaInverse,
    /// `t/(1-pt)`
    SigmaPower(R),
    /// `e^t - 1`
    Exp,
    /// `log(1+t)`
    Log,
    /// `(1+t)^p - 1`
    Hp(R),
    /// `1 - (1-t)^p`
    ReflectedHp(R),
}

impl<R: Scalar> NamedSeries<R> {
    /// Looks a series up by its written form, e.g. `t/(1-pt)` or `log(1+t)`.
    pub fn from_name(name: &str, p: Option<R>) -> Result<Self> {
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace('\u{2212}', "-");
        let need_p = |p: Option<R>| {
            p.ok_or_else(|| Error::MissingInput {
                identity: compact.clone(),
                what: "parameter p".into(),
            })
        };
        Ok(match compact.as_str() {
            "t" => NamedSeries::Identity,
            "-t" => NamedSeries::Negation,
            "t/(1-t)" => NamedSeries::Sigma,
            "t/(1+t)" => NamedSeries::SigmaInverse,
            "t/(1-pt)" => NamedSeries::SigmaPower(need_p(p)?),
            "e^t-1" | "exp(t)-1" => NamedSeries::Exp,
            "log(1+t)" => NamedSeries::Log,
            "(1+t)^p-1" => NamedSeries::Hp(need_p(p)?),
            "1-(1-t)^p" => NamedSeries::ReflectedHp(need_p(p)?),
            _ => return Err(Error::UnknownSeries(name.to_string())),
        })
    }

    /// Coefficient `[t^i]`, `i >= 1`.
    pub fn coeff(&self, i: usize) -> R {
        let sign = |i: usize| if i % 2 == 1 { R::one() } else { -R::one() };
        match self {
            NamedSeries::Identity => {
                if i == 1 {
                    R::one()
                } else {
                    R::zero()
                }
            }
            NamedSeries::Negation => {
                if i == 1 {
                    -R::one()
                } else {
                    R::zero()
                }
            }
            NamedSeries::Sigma => R::one(),
            NamedSeries::SigmaInverse => sign(i),
            NamedSeries::SigmaPower(p) => p.pow(i as u32 - 1),
            NamedSeries::Exp => R::from_rational(Rational::factorial(i).recip().expect("nonzero")),
            NamedSeries::Log => sign(i)
                .div_rational(&Rational::from(i as i64))
                .expect("nonzero"),
            NamedSeries::Hp(p) => binomial(p, i),
            NamedSeries::ReflectedHp(p) => sign(i) * binomial(p, i),
        }
    }

    pub fn series(&self, order: usize) -> Result<FormalSeries<R>> {
        FormalSeries::from_fn(order, |i| self.coeff(i))
    }
}

impl<R: Scalar> fmt::Display for NamedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSeries::Identity => f.write_str("t"),
            NamedSeries::Negation => f.write_str("-t"),
            NamedSeries::Sigma => f.write_str("t/(1-t)"),
            NamedSeries::SigmaInverse => f.write_str("t/(1+t)"),
            NamedSeries::SigmaPower(p) => write!(f, "t/(1-({p})t)"),
            NamedSeries::Exp => f.write_str("e^t-1"),
            NamedSeries::Log => f.write_str("log(1+t)"),
            NamedSeries::Hp(p) => write!(f, "(1+t)^({p})-1"),
            NamedSeries::ReflectedHp(p) => write!(f, "1-(1-t)^({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::PolyScalar;
    use crate::scalars::{One, Zero};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn named(s: NamedSeries<Rational>, n: usize) -> FormalSeries<Rational> {
        s.series(n).unwrap()
    }

    #[test]
    fn second_coefficient_of_composite() {
        let c = PolyScalar::var;
        let f = FormalSeries::new(vec![c("c1"), c("c2")]).unwrap();
        let g = FormalSeries::new(vec![c("d1"), c("d2")]).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(fg.coeff(2), c("c1") * c("d2") + c("c2") * c("d1") * c("d1"));
    }

    #[test]
    fn composition_with_identity_and_inverses() {
        let n = 7;
        let f = named(NamedSeries::Exp, n);
        let t = FormalSeries::identity(n).unwrap();
        assert_eq!(f.compose(&t).unwrap(), f);
        assert_eq!(t.compose(&f).unwrap(), f);
        let s = named(NamedSeries::Sigma, n);
        let si = named(NamedSeries::SigmaInverse, n);
        assert!(s.compose(&si).unwrap().is_identity());
        assert_eq!(s.inverse().unwrap(), si);
        assert_eq!(f.inverse().unwrap(), named(NamedSeries::Log, n));
        assert_eq!(t.inverse().unwrap(), t);
    }

    #[test]
    fn non_invertible_and_mismatched() {
        let f = FormalSeries::new(vec![Rational::zero(), Rational::one()]).unwrap();
        assert_eq!(f.inverse(), Err(Error::NotInvertible));
        let g = named(NamedSeries::Sigma, 3);
        assert!(f.compose(&g).is_err());
        assert_eq!(FormalSeries::<Rational>::new(vec![]), Err(Error::ZeroOrder));
    }

    #[test]
    fn catalog_coefficients() {
        let p = PolyScalar::var("p");
        let h = NamedSeries::Hp(p.clone()).series(3).unwrap();
        assert_eq!(h.coeff(1), p.clone());
        let two = PolyScalar::constant(q("2"));
        assert_eq!(h.coeff(2), (p.clone() * (p.clone() - PolyScalar::one())).div_rational(&q("2")).unwrap());
        assert_eq!(h.coeff(3), (p.clone() * (p.clone() - PolyScalar::one()) * (p.clone() - two)).div_rational(&q("6")).unwrap());
        let geo = named(NamedSeries::SigmaPower(Rational::one()), 4);
        assert_eq!(geo, named(NamedSeries::Sigma, 4));
        let log = named(NamedSeries::Log, 3);
        assert_eq!(log.coefficients(), &[q("1"), q("-1/2"), q("1/3")]);
        let refl = named(NamedSeries::ReflectedHp(q("2")), 3);
        assert_eq!(refl.coefficients(), &[q("2"), q("-1"), q("0")]);
        assert!(NamedSeries::<Rational>::from_name("sin(t)", None).is_err());
        assert_eq!(NamedSeries::<Rational>::from_name("log(1 + t)", None).unwrap(), NamedSeries::Log);
    }
}
