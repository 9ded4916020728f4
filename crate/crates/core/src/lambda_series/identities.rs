use std::fmt;

use super::series::{apply_series, exp_bullet, f_bullet, geometric, log_bullet, LambdaLinComb, LambdaSeries};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::series_maps::{FormalSeries, LinearWordMap, NamedSeries};
use crate::word_algebra::{Alphabet, LinComb, NcPoly, Product};

/// Names accepted by [`IdentityKind::from_name`].
pub const IDENTITY_NAMES: &[&str] = &[
    "ihafid", "expthm", "ikz-remark", "hpow", "psifinv", "siinv", "frprod", "repr", "dblfrac", "expsum",
];

/// The generating-function identities, without their inputs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityKind {
    Ihafid,
    Expthm,
    IkzRemark,
    Hpow,
    Psifinv,
    Siinv,
    Frprod,
    Repr,
    Dblfrac,
    Expsum,
}

impl IdentityKind {
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name.to_ascii_lowercase().replace('_', "-").as_str() {
            "ihafid" => IdentityKind::Ihafid,
            "expthm" => IdentityKind::Expthm,
            "ikz-remark" | "ikz" | "remark" => IdentityKind::IkzRemark,
            "hpow" => IdentityKind::Hpow,
            "psifinv" => IdentityKind::Psifinv,
            "siinv" => IdentityKind::Siinv,
            "frprod" => IdentityKind::Frprod,
            "repr" => IdentityKind::Repr,
            "dblfrac" => IdentityKind::Dblfrac,
            "expsum" => IdentityKind::Expsum,
            _ => return Err(Error::UnknownIdentity(name.to_string())),
        })
    }

    pub fn name(self) -> &'static str {
        IDENTITY_NAMES[self as usize]
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An identity together with the data it is checked on.
///
/// `z` and `y` are elements of `kA[[λ]]`; the identities are stated for
/// `λz` and `λy`.
#[derive(Clone, Debug)]
pub enum Identity<R> {
    /// `Ψ_f(1/(1-λz)) = 1/(1 - f_⋄(λz))`.
    Ihafid { f: FormalSeries<R>, z: LambdaLinComb<R> },
    /// `exp_*(log_⋄(1+λz)) = 1/(1-λz)` and `exp_⋆(-log_⋄(1+λz)) = 1/(1+λz)`.
    Expthm { z: LambdaLinComb<R> },
    /// `exp_*(λz) = (2 - exp_⋄(λz))^{-1}`.
    IkzRemark { z: LambdaLinComb<R> },
    /// `H_p(1/(1-λz)) = (1/(1-λz))^{*p}`.
    Hpow { p: R, z: LambdaLinComb<R> },
    /// `Ψ_g(1/(1+λz)) * Ψ_f(1/(1-λz))^{*p} = 1` with
    /// `g = ((1+t)^{-p} - 1) ∘ f ∘ (-t)`.
    Psifinv { p: R, f: FormalSeries<R>, z: LambdaLinComb<R> },
    /// `Σ^s(1/(1-λz)) * Σ^{1-s}(1/(1+λz)) = 1`.
    Siinv { s: R, z: LambdaLinComb<R> },
    /// `1/(1-λy) * 1/(1-λz) = 1/(1 - λy - λz - λ² y⋄z)` and
    /// `1/(1+λy) ⋆ 1/(1+λz) = 1/((1+λy)⋄(1+λz))`.
    Frprod { y: LambdaLinComb<R>, z: LambdaLinComb<R> },
    /// `Σ^r(1/(1-λz)) * 1/(1+rλz) = 1/(1-(1-r)λz)`.
    Repr { r: R, z: LambdaLinComb<R> },
    /// `Σ(1/(1-λab)) = 1/(1-λab) * Σ(1/(1-λ a⋄b))`.
    Dblfrac { a: LinComb<R>, b: LinComb<R> },
    /// `exp_•(λ(w+v)) = exp_•(λw) • exp_•(λv)`.
    Expsum { mode: Product, w: LambdaLinComb<R>, v: LambdaLinComb<R> },
}

impl<R> Identity<R> {
    pub fn kind(&self) -> IdentityKind {
        match self {
            Identity::Ihafid { .. } => IdentityKind::Ihafid,
            Identity::Expthm { .. } => IdentityKind::Expthm,
            Identity::IkzRemark { .. } => IdentityKind::IkzRemark,
            Identity::Hpow { .. } => IdentityKind::Hpow,
            Identity::Psifinv { .. } => IdentityKind::Psifinv,
            Identity::Siinv { .. } => IdentityKind::Siinv,
            Identity::Frprod { .. } => IdentityKind::Frprod,
            Identity::Repr { .. } => IdentityKind::Repr,
            Identity::Dblfrac { .. } => IdentityKind::Dblfrac,
            Identity::Expsum { .. } => IdentityKind::Expsum,
        }
    }
}

/// Inputs from which an [`Identity`] is assembled by kind.
#[derive(Clone, Debug)]
pub struct IdentityInputs<R> {
    pub z: Option<LambdaLinComb<R>>,
    pub y: Option<LambdaLinComb<R>>,
    pub param: Option<R>,
    pub series: Option<FormalSeries<R>>,
    pub mode: Option<Product>,
}

impl<R> Default for IdentityInputs<R> {
    fn default() -> Self {
        IdentityInputs { z: None, y: None, param: None, series: None, mode: None }
    }
}

impl<R: Scalar> IdentityInputs<R> {
    fn take<T: Clone>(kind: IdentityKind, v: &Option<T>, what: &str) -> Result<T> {
        v.clone().ok_or_else(|| Error::MissingInput { identity: kind.name().into(), what: what.into() })
    }

    /// For `dblfrac`, `z` and `y` must be constant letter combinations
    /// and play the roles of `a` and `b`.
    pub fn build(&self, kind: IdentityKind) -> Result<Identity<R>> {
        let z = || Self::take(kind, &self.z, "z");
        let y = || Self::take(kind, &self.y, "y");
        let p = || Self::take(kind, &self.param, "a scalar parameter");
        let f = || Self::take(kind, &self.series, "a series f");
        let constant = |x: LambdaLinComb<R>, what: &str| -> Result<LinComb<R>> {
            match x.coefficients() {
                [] => Ok(LinComb::zero()),
                [u] => Ok(u.clone()),
                _ => Err(Error::MissingInput {
                    identity: kind.name().into(),
                    what: format!("{what} without λ-dependence"),
                }),
            }
        };
        Ok(match kind {
            IdentityKind::Ihafid => Identity::Ihafid { f: f()?, z: z()? },
            IdentityKind::Expthm => Identity::Expthm { z: z()? },
            IdentityKind::IkzRemark => Identity::IkzRemark { z: z()? },
            IdentityKind::Hpow => Identity::Hpow { p: p()?, z: z()? },
            IdentityKind::Psifinv => Identity::Psifinv { p: p()?, f: f()?, z: z()? },
            IdentityKind::Siinv => Identity::Siinv { s: p()?, z: z()? },
            IdentityKind::Frprod => Identity::Frprod { y: y()?, z: z()? },
            IdentityKind::Repr => Identity::Repr { r: p()?, z: z()? },
            IdentityKind::Dblfrac => Identity::Dblfrac { a: constant(z()?, "a")?, b: constant(y()?, "b")? },
            IdentityKind::Expsum => Identity::Expsum {
                mode: self.mode.unwrap_or(Product::Qsh),
                w: z()?,
                v: y()?,
            },
        })
    }
}

/// Lowest λ-degree where the two sides differ.
#[derive(Clone, PartialEq, Debug)]
pub struct Mismatch<R> {
    pub degree: usize,
    /// `lhs - rhs` at that degree.
    pub difference: NcPoly<R>,
}

/// One equation of an identity.
#[derive(Clone, Debug)]
pub struct PartReport<R> {
    pub label: &'static str,
    pub lhs: LambdaSeries<R>,
    pub rhs: LambdaSeries<R>,
    pub mismatch: Option<Mismatch<R>>,
}

#[derive(Clone, Debug)]
pub struct IdentityReport<R> {
    pub kind: IdentityKind,
    pub order: usize,
    pub parts: Vec<PartReport<R>>,
}

impl<R: Scalar> IdentityReport<R> {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(|p| p.mismatch.is_none())
    }

    pub fn first_mismatch(&self) -> Option<(&'static str, &Mismatch<R>)> {
        self.parts.iter().find_map(|p| p.mismatch.as_ref().map(|m| (p.label, m)))
    }
}

impl<R: Scalar> fmt::Display for IdentityReport<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_mismatch() {
            None => write!(f, "{}: holds through λ^{}", self.kind, self.order),
            Some((label, m)) => write!(
                f,
                "{}: {label} fails at λ^{}, lhs - rhs = {}",
                self.kind, m.degree, m.difference
            ),
        }
    }
}

fn part<R: Scalar>(label: &'static str, lhs: LambdaSeries<R>, rhs: LambdaSeries<R>) -> PartReport<R> {
    let mismatch = lhs.first_difference(&rhs).map(|(degree, difference)| Mismatch { degree, difference });
    PartReport { label, lhs, rhs, mismatch }
}

fn concat_inverse<R: Scalar>(x: &LambdaSeries<R>) -> Result<LambdaSeries<R>> {
    x.inverse(&Alphabet::Zero, Product::Concat)
}

fn need_series<R: Scalar>(f: &FormalSeries<R>, order: usize) -> Result<FormalSeries<R>> {
    if f.order() < order {
        return Err(Error::SeriesTooShort { order: f.order(), len: order });
    }
    f.truncate(order)
}

/// Checks `identity` through `λ^order`.
pub fn check_identity<R: Scalar>(alphabet: &Alphabet<R>, identity: &Identity<R>, order: usize) -> Result<IdentityReport<R>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let n = order;
    let one = LambdaSeries::<R>::one(n);
    let minus = |z: &LambdaLinComb<R>| z.scale(&-R::one());
    let qsh = Product::Qsh;
    let parts = match identity {
        Identity::Ihafid { f, z } => {
            let f = need_series(f, n)?;
            let lhs = geometric(z, n).lift_map(&LinearWordMap::psi(alphabet, f.clone()))?;
            let fz = f_bullet(alphabet, Product::Diamond, &f, z, n)?;
            let rhs = concat_inverse(&(one - fz))?;
            vec![part("Ψ_f(1/(1-λz)) = 1/(1-f_⋄(λz))", lhs, rhs)]
        }
        Identity::Expthm { z } => {
            let log = log_bullet(alphabet, Product::Diamond, &(one.clone() + z.times_lambda(n)))?;
            let first = exp_bullet(alphabet, qsh, &log)?;
            let second = exp_bullet(alphabet, Product::Star, &-log)?;
            vec![
                part("exp_*(log_⋄(1+λz)) = 1/(1-λz)", first, geometric(z, n)),
                part("exp_⋆(-log_⋄(1+λz)) = 1/(1+λz)", second, geometric(&minus(z), n)),
            ]
        }
        Identity::IkzRemark { z } => {
            let lz = z.times_lambda(n);
            let lhs = exp_bullet(alphabet, qsh, &lz)?;
            let two = LambdaSeries::constant(NcPoly::constant(R::from_i64(2)), n);
            let rhs = concat_inverse(&(two - exp_bullet(alphabet, Product::Diamond, &lz)?))?;
            vec![part("exp_*(λz) = (2-exp_⋄(λz))^{-1}", lhs, rhs)]
        }
        Identity::Hpow { p, z } => {
            let g = geometric(z, n);
            let lhs = g.lift_map(&LinearWordMap::hp(alphabet, p.clone()))?;
            let rhs = g.power_scalar(alphabet, qsh, p)?;
            vec![part("H_p(1/(1-λz)) = (1/(1-λz))^{*p}", lhs, rhs)]
        }
        Identity::Psifinv { p, f, z } => {
            let f = need_series(f, n)?;
            let g = NamedSeries::Hp(-p.clone()).series(n)?.compose(&f.negate_argument())?;
            let left = geometric(&minus(z), n).lift_map(&LinearWordMap::psi(alphabet, g))?;
            let right = geometric(z, n)
                .lift_map(&LinearWordMap::psi(alphabet, f))?
                .power_scalar(alphabet, qsh, p)?;
            vec![part("Ψ_g(1/(1+λz)) * Ψ_f(1/(1-λz))^{*p} = 1", left.product(alphabet, qsh, &right)?, one)]
        }
        Identity::Siinv { s, z } => {
            let a = geometric(z, n).lift_map(&LinearWordMap::sigma_power(alphabet, s.clone()))?;
            let b = geometric(&minus(z), n).lift_map(&LinearWordMap::sigma_power(alphabet, R::one() - s.clone()))?;
            vec![part("Σ^s(1/(1-λz)) * Σ^{1-s}(1/(1+λz)) = 1", a.product(alphabet, qsh, &b)?, one)]
        }
        Identity::Frprod { y, z } => {
            let (ly, lz) = (y.times_lambda(n), z.times_lambda(n));
            let lhs = geometric(y, n).product(alphabet, qsh, &geometric(z, n))?;
            let yz = ly.product(alphabet, Product::Diamond, &lz)?;
            let rhs = concat_inverse(&(one.clone() - ly.clone() - lz.clone() - yz))?;
            let lhs2 = geometric(&minus(y), n).product(alphabet, Product::Star, &geometric(&minus(z), n))?;
            let denom = (one.clone() + ly).product(alphabet, Product::Diamond, &(one + lz))?;
            vec![
                part("1/(1-λy) * 1/(1-λz) = 1/(1-λy-λz-λ²y⋄z)", lhs, rhs),
                part("1/(1+λy) ⋆ 1/(1+λz) = 1/((1+λy)⋄(1+λz))", lhs2, concat_inverse(&denom)?),
            ]
        }
        Identity::Repr { r, z } => {
            let lhs = geometric(z, n)
                .lift_map(&LinearWordMap::sigma_power(alphabet, r.clone()))?
                .product(alphabet, qsh, &geometric(&z.scale(&-r.clone()), n))?;
            let rhs = geometric(&z.scale(&(R::one() - r.clone())), n);
            vec![part("Σ^r(1/(1-λz)) * 1/(1+rλz) = 1/(1-(1-r)λz)", lhs, rhs)]
        }
        Identity::Dblfrac { a, b } => {
            let ab = a.to_poly().concat(&b.to_poly());
            let g_ab = concat_inverse(&(one - LambdaSeries::monomial(ab, 1, n)))?;
            let sigma = LinearWordMap::sigma(alphabet);
            let lhs = g_ab.lift_map(&sigma)?;
            let fused = geometric(&LambdaLinComb::from(alphabet.diamond(a, b)), n).lift_map(&sigma)?;
            let rhs = g_ab.product(alphabet, qsh, &fused)?;
            vec![part("Σ(1/(1-λab)) = 1/(1-λab) * Σ(1/(1-λa⋄b))", lhs, rhs)]
        }
        Identity::Expsum { mode, w, v } => {
            let (lw, lv) = (w.times_lambda(n), v.times_lambda(n));
            let lhs = exp_bullet(alphabet, *mode, &(lw.clone() + lv.clone()))?;
            let rhs = exp_bullet(alphabet, *mode, &lw)?.product(alphabet, *mode, &exp_bullet(alphabet, *mode, &lv)?)?;
            vec![part("exp_•(λ(w+v)) = exp_•(λw) • exp_•(λv)", lhs, rhs)]
        }
    };
    Ok(IdentityReport { kind: identity.kind(), order, parts })
}

/// `f_•` of `λz` followed by an outer series, as used for composites such
/// as `g = h ∘ f`: `(h∘f)_•(λz) = h_•(f_•(λz))`.
pub fn compose_bullet<R: Scalar>(
    alphabet: &Alphabet<R>,
    mode: Product,
    outer: &FormalSeries<R>,
    inner: &FormalSeries<R>,
    z: &LambdaLinComb<R>,
    order: usize,
) -> Result<LambdaSeries<R>> {
    apply_series(alphabet, mode, outer, &f_bullet(alphabet, mode, inner, z, order)?)
}
