use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};
use crate::series_maps::{FormalSeries, LinearWordMap, NamedSeries};
use crate::word_algebra::{Alphabet, LinComb, NcPoly, Product};

/// `x_0 + x_1 λ + ... + x_N λ^N` with coefficients in `k<A>`.
///
/// The product used on coefficients is an argument of each operation, not
/// part of the value. The additive operators panic on differing orders;
/// the products report [`Error::LambdaOrderMismatch`].
#[derive(Clone, PartialEq, Debug)]
pub struct LambdaSeries<R> {
    coeffs: Vec<NcPoly<R>>,
}

impl<R: Scalar> LambdaSeries<R> {
    /// Pads with zeros or truncates to `x_0 ..= x_order`.
    pub fn new(mut coeffs: Vec<NcPoly<R>>, order: usize) -> Self {
        coeffs.resize(order + 1, NcPoly::zero());
        LambdaSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        LambdaSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        LambdaSeries::constant(NcPoly::one(), order)
    }

    pub fn constant(x: NcPoly<R>, order: usize) -> Self {
        LambdaSeries::new(vec![x], order)
    }

    /// `x λ^k`.
    pub fn monomial(x: NcPoly<R>, k: usize, order: usize) -> Self {
        let mut s = LambdaSeries::zero(order);
        if k <= order {
            s.coeffs[k] = x;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &NcPoly<R> {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[NcPoly<R>] {
        &self.coeffs
    }

    pub fn scale(&self, c: &R) -> Self {
        LambdaSeries { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    fn same_order(&self, other: &LambdaSeries<R>) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::LambdaOrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    /// Cauchy product: `[λ^n] = sum_{i+j=n} x_i • y_j`.
    pub fn product(&self, alphabet: &Alphabet<R>, mode: Product, other: &LambdaSeries<R>) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = LambdaSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !other.coeffs[j].is_zero() {
                    out.coeffs[i + j] += alphabet.product(mode, &self.coeffs[i], &other.coeffs[j]);
                }
            }
        }
        Ok(out)
    }

    /// Inverse for the given product when `x_0 = 1`:
    /// `y_0 = 1`, `y_n = -sum_{i>=1} x_i • y_{n-i}`.
    pub fn inverse(&self, alphabet: &Alphabet<R>, mode: Product) -> Result<Self> {
        if self.coeffs[0] != NcPoly::one() {
            return Err(Error::NotUnitConstant);
        }
        let n = self.order();
        let mut y: Vec<NcPoly<R>> = vec![NcPoly::one()];
        for k in 1..=n {
            let mut acc = NcPoly::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += alphabet.product(mode, &self.coeffs[i], &y[k - i]);
                }
            }
            y.push(-acc);
        }
        Ok(LambdaSeries { coeffs: y })
    }

    /// Integer power; negative exponents go through [`LambdaSeries::inverse`].
    pub fn power(&self, alphabet: &Alphabet<R>, mode: Product, p: i64) -> Result<Self> {
        let base = if p < 0 { self.inverse(alphabet, mode)? } else { self.clone() };
        let mut acc = LambdaSeries::one(self.order());
        for _ in 0..p.unsigned_abs() {
            acc = acc.product(alphabet, mode, &base)?;
        }
        Ok(acc)
    }

    /// `X^{•p} = exp_•(p log_•(X))` for `x_0 = 1` and any ring element `p`.
    /// Integer `p` takes the direct route.
    pub fn power_scalar(&self, alphabet: &Alphabet<R>, mode: Product, p: &R) -> Result<Self> {
        if let Some(n) = p.as_rational().and_then(|q| q.to_i64()) {
            return self.power(alphabet, mode, n);
        }
        let log = log_bullet(alphabet, mode, self)?;
        exp_bullet(alphabet, mode, &log.scale(p))
    }

    /// `M` applied to every coefficient (`M(λ) = λ`).
    pub fn lift_map(&self, map: &LinearWordMap<R>) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|x| map.apply(x)).collect::<Result<_>>()?;
        Ok(LambdaSeries { coeffs })
    }

    /// Lowest degree where the two series differ, with `self - other` there.
    pub fn first_difference(&self, other: &LambdaSeries<R>) -> Option<(usize, NcPoly<R>)> {
        let n = self.order().max(other.order());
        let zero = NcPoly::zero();
        (0..=n).find_map(|k| {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            (a != b).then(|| (k, a.clone() - b.clone()))
        })
    }
}

impl<R: Scalar> Add for LambdaSeries<R> {
    type Output = LambdaSeries<R>;
    fn add(self, rhs: LambdaSeries<R>) -> LambdaSeries<R> {
        self.same_order(&rhs).expect("lambda series orders differ");
        LambdaSeries {
            coeffs: self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<R: Scalar> Neg for LambdaSeries<R> {
    type Output = LambdaSeries<R>;
    fn neg(self) -> LambdaSeries<R> {
        LambdaSeries { coeffs: self.coeffs.into_iter().map(|a| -a).collect() }
    }
}

impl<R: Scalar> Sub for LambdaSeries<R> {
    type Output = LambdaSeries<R>;
    fn sub(self, rhs: LambdaSeries<R>) -> LambdaSeries<R> {
        self + (-rhs)
    }
}

impl<R: Scalar> fmt::Display for LambdaSeries<R> {
    /// One `λ^k: x_k` entry per nonzero coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(f, "λ^{k}: {x}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(λ^{})", self.order() + 1)
    }
}

/// `z = u_0 + u_1 λ + u_2 λ^2 + ...` with every `u_k` in `kA`.
///
/// Identities are stated for `λz`, which has no constant term.
#[derive(Clone, PartialEq, Debug)]
pub struct LambdaLinComb<R> {
    coeffs: Vec<LinComb<R>>,
}

impl<R: Scalar> LambdaLinComb<R> {
    /// `coeffs[k]` is the coefficient of `λ^k` in `z`.
    pub fn new(coeffs: Vec<LinComb<R>>) -> Self {
        LambdaLinComb { coeffs }
    }

    pub fn coefficients(&self) -> &[LinComb<R>] {
        &self.coeffs
    }

    pub fn scale(&self, c: &R) -> Self {
        LambdaLinComb { coeffs: self.coeffs.iter().map(|u| u.scale(c)).collect() }
    }

    /// `λz` truncated at `order`.
    pub fn times_lambda(&self, order: usize) -> LambdaSeries<R> {
        let coeffs = std::iter::once(NcPoly::zero())
            .chain(self.coeffs.iter().map(LinComb::to_poly))
            .collect();
        LambdaSeries::new(coeffs, order)
    }
}

impl<R: Scalar> From<LinComb<R>> for LambdaLinComb<R> {
    fn from(u: LinComb<R>) -> Self {
        LambdaLinComb::new(vec![u])
    }
}

impl<R: Scalar> fmt::Display for LambdaLinComb<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, u) in self.coeffs.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({u})")?,
                _ => write!(f, "λ^{k}*({u})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `1/(1 - λz)` as a concatenation inverse.
pub fn geometric<R: Scalar>(z: &LambdaLinComb<R>, order: usize) -> LambdaSeries<R> {
    let denom = LambdaSeries::one(order) - z.times_lambda(order);
    denom
        .inverse(&Alphabet::Zero, Product::Concat)
        .expect("constant term is 1")
}

/// `f(X) = sum_i c_i X^{•i}` for `X` without constant term.
pub fn apply_series<R: Scalar>(
    alphabet: &Alphabet<R>,
    mode: Product,
    f: &FormalSeries<R>,
    x: &LambdaSeries<R>,
) -> Result<LambdaSeries<R>> {
    if !x.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let n = x.order();
    if f.order() < n {
        return Err(Error::SeriesTooShort { order: f.order(), len: n });
    }
    let mut out = LambdaSeries::zero(n);
    let mut pow = LambdaSeries::one(n);
    for i in 1..=n {
        pow = pow.product(alphabet, mode, x)?;
        let c = f.coeff(i);
        if !c.is_zero() {
            out = out + pow.scale(&c);
        }
    }
    Ok(out)
}

/// `f_•(λz) = sum_i c_i λ^i z^{•i}`.
pub fn f_bullet<R: Scalar>(
    alphabet: &Alphabet<R>,
    mode: Product,
    f: &FormalSeries<R>,
    z: &LambdaLinComb<R>,
    order: usize,
) -> Result<LambdaSeries<R>> {
    apply_series(alphabet, mode, f, &z.times_lambda(order))
}

/// `exp_•(X) = 1 + (e^t - 1)_•(X)`.
pub fn exp_bullet<R: Scalar>(alphabet: &Alphabet<R>, mode: Product, x: &LambdaSeries<R>) -> Result<LambdaSeries<R>> {
    let n = x.order();
    let f = NamedSeries::Exp.series(n.max(1))?;
    Ok(LambdaSeries::one(n) + apply_series(alphabet, mode, &f, x)?)
}

/// `log_•(X) = log(1+t)_•(X - 1)` for `x_0 = 1`.
pub fn log_bullet<R: Scalar>(alphabet: &Alphabet<R>, mode: Product, x: &LambdaSeries<R>) -> Result<LambdaSeries<R>> {
    if x.coeff(0) != &NcPoly::one() {
        return Err(Error::NotUnitConstant);
    }
    let n = x.order();
    let f = NamedSeries::Log.series(n.max(1))?;
    apply_series(alphabet, mode, &f, &(x.clone() - LambdaSeries::one(n)))
}

/// `z^{⋄i}` expansion helper: the coefficient of `λ^i` in `log_⋄(1 + λz)`
/// for a constant letter combination is `(-1)^{i-1} z^{⋄i} / i`.
pub fn log_diamond_coefficient<R: Scalar>(alphabet: &Alphabet<R>, z: &LinComb<R>, i: usize) -> LinComb<R> {
    let sign = if i % 2 == 1 { R::one() } else { -R::one() };
    let c = sign.div_rational(&Rational::from(i as i64)).expect("nonzero");
    alphabet.diamond_power(z, i).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::{Letter, Word};

    type Q = Rational;

    fn word(ix: &[u32]) -> NcPoly<Q> {
        NcPoly::word(Word::from_indices(ix))
    }

    fn zl(i: u32) -> LambdaLinComb<Q> {
        LinComb::letter(Letter::z(i)).into()
    }

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    #[test]
    fn diamond_square_of_one_plus_lambda_z1() {
        let z = Alphabet::<Q>::Z;
        let x = LambdaSeries::one(2) + zl(1).times_lambda(2);
        let sq = x.product(&z, Product::Diamond, &x).unwrap();
        let expected = LambdaSeries::new(vec![NcPoly::one(), word(&[1]).scale(&q("2")), word(&[2])], 2);
        assert_eq!(sq, expected);
        for mode in [Product::Qsh, Product::Star, Product::Shuffle, Product::Diamond, Product::Concat] {
            assert_eq!(x.product(&z, mode, &LambdaSeries::one(2)).unwrap(), x);
        }
        let sh = x.product(&z, Product::Shuffle, &x).unwrap();
        assert_eq!(sh.coeff(2), &word(&[1, 1]).scale(&q("2")));
    }

    #[test]
    fn geometric_series() {
        let g = geometric(&zl(3), 4);
        for n in 0..=4 {
            assert_eq!(g.coeff(n), &word(&vec![3; n]));
        }
        let zero = LambdaLinComb::<Q>::new(vec![]);
        assert_eq!(geometric(&zero, 3), LambdaSeries::one(3));
        // z = z1 + λ z2: [λ^2] 1/(1 - λz) = z1 z1 + z2.
        let z = LambdaLinComb::new(vec![LinComb::letter(Letter::z(1)), LinComb::letter(Letter::z(2))]);
        assert_eq!(geometric(&z, 2).coeff(2), &(word(&[1, 1]) + word(&[2])));
    }

    #[test]
    fn bullet_calculus() {
        let z = Alphabet::<Q>::Z;
        let f = NamedSeries::Log.series(4).unwrap();
        let l = f_bullet(&z, Product::Diamond, &f, &zl(2), 4).unwrap();
        for i in 1..=4usize {
            let sign = if i % 2 == 1 { Q::from(1) } else { Q::from(-1) };
            let expected = word(&[2 * i as u32]).scale(&(sign / Q::from(i as i64)));
            assert_eq!(l.coeff(i), &expected);
            assert_eq!(
                l.coeff(i),
                &log_diamond_coefficient(&z, &LinComb::letter(Letter::z(2)), i).to_poly()
            );
        }
        let t = NamedSeries::Identity.series(3).unwrap();
        assert_eq!(f_bullet(&z, Product::Qsh, &t, &zl(1), 3).unwrap(), zl(1).times_lambda(3));
        let e = exp_bullet(&z, Product::Diamond, &zl(1).times_lambda(3)).unwrap();
        let expected = LambdaSeries::new(
            vec![NcPoly::one(), word(&[1]), word(&[2]).scale(&q("1/2")), word(&[3]).scale(&q("1/6"))],
            3,
        );
        assert_eq!(e, expected);
        let back = log_bullet(&z, Product::Diamond, &e).unwrap();
        assert_eq!(back, zl(1).times_lambda(3));
    }

    #[test]
    fn lifting_maps() {
        let z = Alphabet::<Q>::Z;
        let g = geometric(&zl(2), 4);
        let tg = g.lift_map(&LinearWordMap::t()).unwrap();
        assert_eq!(tg, geometric(&zl(2).scale(&Q::from(-1)), 4));
        assert_eq!(g.lift_map(&LinearWordMap::identity()).unwrap(), g);
        let x = LambdaSeries::one(2) + zl(2).times_lambda(2);
        assert_eq!(x.lift_map(&LinearWordMap::sigma(&z)).unwrap(), x);
    }

    #[test]
    fn inverses_and_powers() {
        let z = Alphabet::<Q>::Z;
        let g = geometric(&zl(1), 4);
        for mode in [Product::Qsh, Product::Star, Product::Concat] {
            let inv = g.inverse(&z, mode).unwrap();
            assert_eq!(g.product(&z, mode, &inv).unwrap(), LambdaSeries::one(4));
        }
        let sq = g.power(&z, Product::Qsh, 2).unwrap();
        assert_eq!(sq, g.product(&z, Product::Qsh, &g).unwrap());
        let half = g.power_scalar(&z, Product::Qsh, &q("1/2")).unwrap();
        assert_eq!(half.product(&z, Product::Qsh, &half).unwrap(), g);
        assert_eq!(LambdaSeries::<Q>::zero(2).inverse(&z, Product::Qsh), Err(Error::NotUnitConstant));
    }
}
