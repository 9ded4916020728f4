use anyhow::{anyhow, bail, Context, Result};
use quasishuffle::scalars::Zero;
use quasishuffle::{Alphabet, NcPoly, PolyScalar, QSeries, Rational, Scalar};

use crate::parse::{parse_expr, parse_scalar, Expr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetKind {
    Z,
    Q,
    Euler(u32),
    Zero,
}

impl std::str::FromStr for AlphabetKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "z" | "Z" => AlphabetKind::Z,
            "q" | "Q" => AlphabetKind::Q,
            "zero" => AlphabetKind::Zero,
            _ => match s.strip_prefix("euler:") {
                Some(r) => AlphabetKind::Euler(r.parse().with_context(|| format!("bad root order in `{s}`"))?),
                None => bail!("unknown alphabet `{s}` (expected z, q, euler:<r> or zero)"),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Rational,
    Poly(Vec<String>),
    QSeries(usize),
}

impl std::str::FromStr for Ring {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(Ring::Rational);
        }
        if let Some(vars) = s.strip_prefix("poly:") {
            let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
            if vars.is_empty() {
                bail!("`poly:` needs at least one variable");
            }
            return Ok(Ring::Poly(vars));
        }
        if let Some(m) = s.strip_prefix("qseries:") {
            let m: usize = m.parse().with_context(|| format!("bad truncation in `{s}`"))?;
            if m == 0 {
                bail!("`qseries:` needs a truncation order of at least 1");
            }
            return Ok(Ring::QSeries(m));
        }
        bail!("unknown coefficient ring `{s}` (expected rational, poly:<vars> or qseries:<M>)")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Alphabet, coefficient ring and output settings shared by all commands.
#[derive(Clone, Debug)]
pub struct Config {
    pub alphabet: AlphabetKind,
    pub ring: Ring,
    pub trunc: usize,
    pub format: Format,
    pub seed: u64,
}

impl Config {
    /// Validates the alphabet against the ring. Without `--coeff`, the `q`
    /// alphabet defaults to `poly:eps` and the others to `rational`.
    pub fn new(alphabet: AlphabetKind, ring: Option<Ring>, trunc: usize, format: Format, seed: u64) -> Result<Self> {
        let ring = ring.unwrap_or(match alphabet {
            AlphabetKind::Q => Ring::Poly(vec!["eps".into()]),
            _ => Ring::Rational,
        });
        match (&alphabet, &ring) {
            (AlphabetKind::Euler(r), _) if *r < 2 => bail!("the Euler alphabet needs r >= 2, got {r}"),
            (AlphabetKind::Q, Ring::Rational) => {
                bail!("the q alphabet needs --coeff poly:eps or --coeff qseries:<M>")
            }
            (AlphabetKind::Q, Ring::Poly(vars)) if !vars.iter().any(|v| v == "eps") => {
                bail!("the q alphabet with polynomial coefficients needs the variable eps in --coeff")
            }
            _ => {}
        }
        if trunc == 0 {
            bail!("--trunc must be at least 1");
        }
        Ok(Config { alphabet, ring, trunc, format, seed })
    }
}

/// Coefficient rings selectable with `--coeff`.
pub trait CliScalar: Scalar {
    /// Image of a parsed polynomial coefficient.
    fn lift(p: &PolyScalar, ring: &Ring) -> Result<Self>;
}

impl CliScalar for Rational {
    fn lift(p: &PolyScalar, _: &Ring) -> Result<Self> {
        p.as_rational()
            .ok_or_else(|| anyhow!("coefficient `{p}` is not rational; declare its variables with --coeff poly:<vars>"))
    }
}

impl CliScalar for PolyScalar {
    fn lift(p: &PolyScalar, ring: &Ring) -> Result<Self> {
        let Ring::Poly(vars) = ring else { unreachable!("ring dispatch") };
        p.ensure_vars(vars)?;
        Ok(p.clone())
    }
}

impl CliScalar for QSeries {
    /// `q` and `eps = 1 - q` are the only variables; every coefficient is
    /// truncated at the configured order.
    fn lift(p: &PolyScalar, ring: &Ring) -> Result<Self> {
        let Ring::QSeries(m) = *ring else { unreachable!("ring dispatch") };
        let one = Rational::from(1);
        let value = p
            .eval_with(|v| match v {
                "q" => Some(QSeries::truncated(vec![Rational::zero(), one.clone()], m)),
                "eps" => Some(QSeries::truncated(vec![one.clone(), -one.clone()], m)),
                _ => None,
            })
            .map_err(|e| anyhow!("{e}; q-series coefficients may only use q and eps"))?;
        Ok(value.truncate_to(m)?)
    }
}

impl Config {
    pub fn alphabet<R: CliScalar>(&self) -> Result<Alphabet<R>> {
        Ok(match self.alphabet {
            AlphabetKind::Z => Alphabet::Z,
            AlphabetKind::Zero => Alphabet::Zero,
            AlphabetKind::Euler(r) => Alphabet::euler(r)?,
            AlphabetKind::Q => Alphabet::Q { eps: R::lift(&PolyScalar::var("eps"), &self.ring)? },
        })
    }

    pub fn scalar<R: CliScalar>(&self, text: &str) -> Result<R> {
        let p = parse_scalar(text).with_context(|| format!("cannot parse scalar `{text}`"))?;
        R::lift(&p, &self.ring)
    }

    /// Parses an expression, lifts its coefficients and checks its letters.
    pub fn expr<R: CliScalar>(&self, text: &str) -> Result<NcPoly<R>> {
        let e: Expr = parse_expr(text).with_context(|| format!("cannot parse `{text}`"))?;
        let x = lift_expr(&e, &self.ring)?;
        self.alphabet::<R>()?.validate(&x)?;
        Ok(x)
    }
}

pub fn lift_expr<R: CliScalar>(e: &Expr, ring: &Ring) -> Result<NcPoly<R>> {
    let mut out = NcPoly::zero();
    for (w, c) in e.terms() {
        out.add_term(w.clone(), R::lift(c, ring)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compatibility() {
        assert!(Config::new(AlphabetKind::Q, Some(Ring::Rational), 4, Format::Text, 0).is_err());
        assert!(Config::new(AlphabetKind::Q, Some(Ring::Poly(vec!["r".into()])), 4, Format::Text, 0).is_err());
        assert!(Config::new(AlphabetKind::Q, Some(Ring::QSeries(5)), 4, Format::Text, 0).is_ok());
        assert_eq!(Config::new(AlphabetKind::Q, None, 4, Format::Text, 0).unwrap().ring, Ring::Poly(vec!["eps".into()]));
        assert!(Config::new(AlphabetKind::Euler(1), None, 4, Format::Text, 0).is_err());
        assert!("euler:x".parse::<AlphabetKind>().is_err());
        assert_eq!("poly:r, s".parse::<Ring>().unwrap(), Ring::Poly(vec!["r".into(), "s".into()]));
    }

    #[test]
    fn lifting() {
        let cfg = Config::new(AlphabetKind::Z, None, 4, Format::Text, 0).unwrap();
        assert!(cfg.expr::<Rational>("r*z1").is_err());
        assert!(cfg.expr::<Rational>("z1,0").is_err());
        let cfg = Config::new(AlphabetKind::Q, Some(Ring::QSeries(3)), 4, Format::Text, 0).unwrap();
        let x: NcPoly<QSeries> = cfg.expr("eps*z1 + q^5*z2").unwrap();
        assert_eq!(x.num_terms(), 1);
        assert_eq!(x.coeff(&quasishuffle::Word::from_indices(&[1])).to_string(), "1 - q");
        assert!(cfg.expr::<QSeries>("r*z1").is_err());
    }
}
