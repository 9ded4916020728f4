//! Reference implementations used by the acceptance gate. They follow the
//! defining formulas directly (right-end recursion, explicit subsets,
//! brute-force chains) and share no code paths with the library beyond
//! its container types.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use quasishuffle::scalars::{One, Zero};
use quasishuffle::{Alphabet, Letter, NcPoly, Rational, Scalar, Word};

pub type Lin<R> = BTreeMap<Letter, R>;

/// The letter rule `a ⋄ b`, written out per alphabet.
pub fn diamond<R: Scalar>(alphabet: &Alphabet<R>, a: Letter, b: Letter) -> Lin<R> {
    let mut out = Lin::new();
    match alphabet {
        Alphabet::Z => {
            out.insert(Letter::z(a.index + b.index), R::one());
        }
        Alphabet::Q { eps } => {
            let n = a.index + b.index;
            out.insert(Letter::z(n), R::one());
            out.insert(Letter::z(n - 1), eps.clone());
        }
        Alphabet::Euler { r } => {
            let color = (a.color.unwrap() + b.color.unwrap()) % r;
            out.insert(Letter { index: a.index + b.index, color: Some(color) }, R::one());
        }
        Alphabet::Zero => {}
    }
    out
}

fn add_lin<R: Scalar>(acc: &mut Lin<R>, a: Letter, c: R) {
    let next = acc.remove(&a).map_or(c.clone(), |x| x + c);
    if !next.is_zero() {
        acc.insert(a, next);
    }
}

/// `a_1 ⋄ ... ⋄ a_k` for a nonempty block.
pub fn fuse<R: Scalar>(alphabet: &Alphabet<R>, block: &[Letter]) -> Lin<R> {
    let mut acc = Lin::new();
    acc.insert(block[0], R::one());
    for &b in &block[1..] {
        let mut next = Lin::new();
        for (a, c) in &acc {
            for (e, k) in diamond(alphabet, *a, b) {
                add_lin(&mut next, e, c.clone() * k);
            }
        }
        acc = next;
    }
    acc
}

fn append<R: Scalar>(x: &NcPoly<R>, tail: &Lin<R>) -> NcPoly<R> {
    let mut out = NcPoly::zero();
    for (w, c) in x.terms() {
        for (a, k) in tail {
            let mut letters = w.letters().to_vec();
            letters.push(*a);
            out.add_term(Word::new(letters), c.clone() * k.clone());
        }
    }
    out
}

fn single<R: Scalar>(a: Letter) -> Lin<R> {
    let mut l = Lin::new();
    l.insert(a, R::one());
    l
}

/// `ua * vb = (u * vb)a + (ua * v)b + sign (u * v)(a ⋄ b)`, recursing on
/// the last letters; `sign = 0` gives the shuffle.
pub fn quasi_shuffle<R: Scalar>(alphabet: &Alphabet<R>, u: &Word, v: &Word, sign: i64) -> NcPoly<R> {
    fn go<R: Scalar>(
        alphabet: &Alphabet<R>,
        u: &[Letter],
        v: &[Letter],
        sign: i64,
        memo: &mut HashMap<(usize, usize), NcPoly<R>>,
    ) -> NcPoly<R> {
        if u.is_empty() || v.is_empty() {
            let mut w = u.to_vec();
            w.extend_from_slice(v);
            return NcPoly::word(Word::new(w));
        }
        if let Some(hit) = memo.get(&(u.len(), v.len())) {
            return hit.clone();
        }
        let (a, u0) = u.split_last().unwrap();
        let (b, v0) = v.split_last().unwrap();
        let mut out = append(&go(alphabet, u0, v, sign, memo), &single(*a));
        out += append(&go(alphabet, u, v0, sign, memo), &single(*b));
        if sign != 0 {
            let fused: Lin<R> = diamond(alphabet, *a, *b)
                .into_iter()
                .map(|(e, k)| (e, k * R::from_i64(sign)))
                .collect();
            out += append(&go(alphabet, u0, v0, sign, memo), &fused);
        }
        memo.insert((u.len(), v.len()), out.clone());
        out
    }
    go(alphabet, u.letters(), v.letters(), sign, &mut HashMap::new())
}

pub fn quasi_shuffle_poly<R: Scalar>(alphabet: &Alphabet<R>, x: &NcPoly<R>, y: &NcPoly<R>, sign: i64) -> NcPoly<R> {
    let mut out = NcPoly::zero();
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            out += quasi_shuffle(alphabet, u, v, sign).scale(&(a.clone() * b.clone()));
        }
    }
    out
}

/// `sum over subsets of the gaps of w`: fuse each block, weight the
/// composition by `prod coeff(block size)`.
pub fn psi<R: Scalar>(alphabet: &Alphabet<R>, coeff: &dyn Fn(usize) -> R, w: &Word) -> NcPoly<R> {
    let n = w.len();
    if n == 0 {
        return NcPoly::one();
    }
    let letters = w.letters();
    let mut out = NcPoly::zero();
    for mask in 0u64..(1 << (n - 1)) {
        let mut blocks: Vec<&[Letter]> = Vec::new();
        let mut start = 0;
        for gap in 0..n - 1 {
            if mask >> gap & 1 == 1 {
                blocks.push(&letters[start..=gap]);
                start = gap + 1;
            }
        }
        blocks.push(&letters[start..]);
        let weight = blocks.iter().fold(R::one(), |acc, b| acc * coeff(b.len()));
        if weight.is_zero() {
            continue;
        }
        let mut acc = NcPoly::one().scale(&weight);
        for b in blocks {
            acc = append(&acc, &fuse(alphabet, b));
        }
        out += acc;
    }
    out
}

pub fn psi_poly<R: Scalar>(alphabet: &Alphabet<R>, coeff: &dyn Fn(usize) -> R, x: &NcPoly<R>) -> NcPoly<R> {
    let mut out = NcPoly::zero();
    for (w, c) in x.terms() {
        out += psi(alphabet, coeff, w).scale(c);
    }
    out
}

/// `Σ = Ψ_{t/(1-t)}`: every composition with weight 1.
pub fn sigma<R: Scalar>(alphabet: &Alphabet<R>, w: &Word) -> NcPoly<R> {
    psi(alphabet, &|_| R::one(), w)
}

/// `Σ^ρ = Ψ_{t/(1-ρt)}`.
pub fn sigma_power<R: Scalar>(alphabet: &Alphabet<R>, rho: &R, w: &Word) -> NcPoly<R> {
    psi(alphabet, &|i| rho.pow(i as u32 - 1), w)
}

/// `binom(p, i)` by the falling factorial.
pub fn binomial<R: Scalar>(p: &R, i: usize) -> R {
    let mut acc = R::one();
    for k in 0..i {
        acc = acc * (p.clone() - R::from_i64(k as i64));
    }
    acc * R::from_rational(Rational::factorial(i)).try_inverse().unwrap()
}

/// Extended `⋄` on words, with `1` as unit.
pub fn diamond_words<R: Scalar>(alphabet: &Alphabet<R>, u: &Word, v: &Word) -> NcPoly<R> {
    if u.is_empty() {
        return NcPoly::word(v.clone());
    }
    if v.is_empty() {
        return NcPoly::word(u.clone());
    }
    let (a, head) = u.letters().split_last().unwrap();
    let (b, tail) = v.letters().split_first().unwrap();
    let mut out = NcPoly::zero();
    for (c, k) in diamond(alphabet, *a, *b) {
        let mut letters = head.to_vec();
        letters.push(c);
        letters.extend_from_slice(tail);
        out.add_term(Word::new(letters), k);
    }
    out
}

pub fn diamond_poly<R: Scalar>(alphabet: &Alphabet<R>, x: &NcPoly<R>, y: &NcPoly<R>) -> NcPoly<R> {
    let mut out = NcPoly::zero();
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            out += diamond_words(alphabet, u, v).scale(&(a.clone() * b.clone()));
        }
    }
    out
}

/// `(w[..i], w[i..])` for `i = 0..=n`, optionally without the trivial ends.
pub fn splits(w: &Word, reduced: bool) -> Vec<(Word, Word)> {
    let n = w.len();
    let range = if reduced { 1..n.max(1) } else { 0..n + 1 };
    range
        .map(|i| (Word::new(w.letters()[..i].to_vec()), Word::new(w.letters()[i..].to_vec())))
        .collect()
}

/// `D w = sum over proper splits of w1 ⋄ w2`.
pub fn derivation<R: Scalar>(alphabet: &Alphabet<R>, x: &NcPoly<R>) -> NcPoly<R> {
    let mut out = NcPoly::zero();
    for (w, c) in x.terms() {
        for (u, v) in splits(w, true) {
            out += diamond_words(alphabet, &u, &v).scale(c);
        }
    }
    out
}

/// `f(g(t))` truncated at the common order, by naive series products.
pub fn compose<R: Scalar>(f: &[R], g: &[R]) -> Vec<R> {
    let n = f.len();
    let mul = |a: &[R], b: &[R]| -> Vec<R> {
        let mut out = vec![R::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                out[i + j] = out[i + j].clone() + a[i].clone() * b[j].clone();
            }
        }
        out
    };
    let mut gfull = vec![R::zero(); n + 1];
    gfull[1..].clone_from_slice(&g[..n]);
    let mut power = vec![R::zero(); n + 1];
    power[0] = R::one();
    let mut out = vec![R::zero(); n + 1];
    for c in f {
        power = mul(&power, &gfull);
        for k in 0..=n {
            out[k] = out[k].clone() + c.clone() * power[k].clone();
        }
    }
    out[1..].to_vec()
}

/// Decreasing chains `n >= m_1 (>|>=) m_2 ... >= 1` of the given depth.
pub fn chains(n: u64, depth: usize, strict: bool) -> Vec<Vec<u64>> {
    fn go(top: u64, depth: usize, strict: bool, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if depth == 0 {
            out.push(prefix.clone());
            return;
        }
        for m in 1..=top {
            prefix.push(m);
            go(if strict { m - 1 } else { m }, depth - 1, strict, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, depth, strict, &mut Vec::new(), &mut out);
    out
}

/// `sum over chains of prod 1/m_j^{i_j}`, exactly.
pub fn harmonic(w: &Word, n: u64, strict: bool) -> Rational {
    let mut total = Rational::zero();
    for chain in chains(n, w.len(), strict) {
        let mut term = Rational::one();
        for (a, m) in w.letters().iter().zip(chain) {
            term = term * Rational::new(1, m.pow(a.index)).unwrap();
        }
        total = total + term;
    }
    total
}

/// Unsigned Stirling numbers of the first kind, `c(n, k)`, by
/// `c(n+1, k) = n c(n, k) + c(n, k-1)`.
pub fn stirling1(n: usize, k: usize) -> u64 {
    let mut table = vec![vec![0u64; n + 2]; n + 2];
    table[0][0] = 1;
    for m in 0..n {
        for j in 1..=m + 1 {
            table[m + 1][j] = m as u64 * table[m][j] + table[m][j - 1];
        }
    }
    table[n][k]
}

/// Truncated power series in `q` with `order + 1` rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Trunc(pub Vec<Rational>);

impl Trunc {
    pub fn constant(order: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); order + 1];
        v[0] = c;
        Trunc(v)
    }

    pub fn mul(&self, other: &Trunc) -> Trunc {
        let n = self.0.len();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] = out[i + j].clone() + self.0[i].clone() * other.0[j].clone();
            }
        }
        Trunc(out)
    }

    pub fn add(&self, other: &Trunc) -> Trunc {
        Trunc(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }
}

/// `q^{m(i-1)} (1-q)^i / (1-q^m)^i`.
fn qzeta_factor(order: usize, i: u32, m: u64) -> Trunc {
    let m = m as usize;
    let mut shift = Trunc::constant(order, Rational::zero());
    if m * (i as usize - 1) <= order {
        shift.0[m * (i as usize - 1)] = Rational::one();
    }
    let mut one_minus_q = Trunc::constant(order, Rational::one());
    if order >= 1 {
        one_minus_q.0[1] = -Rational::one();
    }
    let mut geometric = Trunc::constant(order, Rational::zero());
    for k in (0..=order).step_by(m) {
        geometric.0[k] = Rational::one();
    }
    let mut out = shift;
    for _ in 0..i {
        out = out.mul(&one_minus_q).mul(&geometric);
    }
    out
}

/// `ζ_q(w)` mod `q^{order+1}` by enumerating every chain with
/// `m_1 <= order` (larger `m_1` only contribute beyond the truncation
/// when the first index is at least 2).
pub fn qzeta(w: &Word, order: usize, strict: bool) -> Trunc {
    let mut total = Trunc::constant(order, Rational::zero());
    for chain in chains(order as u64, w.len(), strict) {
        let mut term = Trunc::constant(order, Rational::one());
        for (a, m) in w.letters().iter().zip(chain) {
            term = term.mul(&qzeta_factor(order, a.index, m));
        }
        total = total.add(&term);
    }
    total
}

/// Dense bivariate `f64` series in `t` and `s`, truncated at a common
/// degree in each variable.
#[derive(Clone, Debug)]
pub struct Bivariate {
    pub deg: usize,
    pub c: Vec<Vec<f64>>,
}

impl Bivariate {
    pub fn zero(deg: usize) -> Self {
        Bivariate { deg, c: vec![vec![0.0; deg + 1]; deg + 1] }
    }

    pub fn mul(&self, other: &Bivariate) -> Bivariate {
        let mut out = Bivariate::zero(self.deg);
        for i in 0..=self.deg {
            for j in 0..=self.deg {
                for k in 0..=self.deg - i {
                    for l in 0..=self.deg - j {
                        out.c[i + k][j + l] += self.c[i][j] * other.c[k][l];
                    }
                }
            }
        }
        out
    }

    /// Inverse of a series with constant term 1: `x^{-1} = sum (1-x)^k`.
    pub fn inverse(&self) -> Bivariate {
        assert!((self.c[0][0] - 1.0).abs() < 1e-15);
        let mut nil = self.clone();
        for row in &mut nil.c {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        nil.c[0][0] = 0.0;
        let mut out = Bivariate::zero(self.deg);
        let mut power = Bivariate::zero(self.deg);
        power.c[0][0] = 1.0;
        for _ in 0..=2 * self.deg {
            for i in 0..=self.deg {
                for j in 0..=self.deg {
                    out.c[i][j] += power.c[i][j];
                }
            }
            power = power.mul(&nil);
        }
        out
    }

    /// Substitutes `s -> a s`.
    pub fn scale_s(&self, a: f64) -> Bivariate {
        let mut out = self.clone();
        for row in &mut out.c {
            for (j, v) in row.iter_mut().enumerate() {
                *v *= a.powi(j as i32);
            }
        }
        out
    }
}

/// Coefficients `[x^0..x^n]` of `1/h` for `h(0) = 1`.
pub fn invert(h: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; h.len()];
    out[0] = 1.0 / h[0];
    for n in 1..h.len() {
        let s: f64 = (1..=n).map(|k| h[k] * out[n - k]).sum();
        out[n] = -s / h[0];
    }
    out
}

pub fn mul_series(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut out = vec![0.0; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

pub fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}
