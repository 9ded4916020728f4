use std::fmt;
use std::str::FromStr;

use super::{LinComb, NcPoly, Tensor, Word};
use super::Letter;
use crate::error::{Error, Result};
use crate::scalars::{PolyScalar, QSeries, Scalar};

/// A letter set together with its commutative, associative `⋄` rule.
#[derive(Clone, Debug, PartialEq)]
pub enum Alphabet<R> {
    /// `z_i ⋄ z_j = z_{i+j}`.
    Z,
    /// `z_i ⋄ z_j = z_{i+j} + eps z_{i+j-1}`, where `eps` stands for `1 - q`.
    Q { eps: R },
    /// `z_{i,j} ⋄ z_{p,q} = z_{i+p, j+q mod r}`.
    Euler { r: u32 },
    /// `⋄ = 0`: both quasi-shuffles reduce to the shuffle.
    Zero,
}

/// Bilinear products available on `k<A>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Product {
    /// `*`
    Qsh,
    /// `⋆`
    Star,
    /// `⧢`
    Shuffle,
    /// Extended `⋄`.
    Diamond,
    /// Juxtaposition.
    Concat,
}

impl Product {
    pub fn is_commutative(self) -> bool {
        !matches!(self, Product::Concat)
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Product::Qsh => "qsh",
            Product::Star => "qsh-star",
            Product::Shuffle => "shuffle",
            Product::Diamond => "diamond",
            Product::Concat => "concat",
        })
    }
}

impl FromStr for Product {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "qsh" | "star" | "*" | "stuffle" => Ok(Product::Qsh),
            "qsh-star" | "qsh_star" | "sstar" | "⋆" => Ok(Product::Star),
            "shuffle" | "sh" | "⧢" => Ok(Product::Shuffle),
            "diamond" | "⋄" => Ok(Product::Diamond),
            "concat" | "cat" => Ok(Product::Concat),
            _ => Err(format!("unknown product `{s}`")),
        }
    }
}

impl<R> Alphabet<R> {
    pub fn euler(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidRootOrder(r));
        }
        Ok(Alphabet::Euler { r })
    }

    pub fn name(&self) -> String {
        match self {
            Alphabet::Z => "z".into(),
            Alphabet::Q { .. } => "q".into(),
            Alphabet::Euler { r } => format!("euler:{r}"),
            Alphabet::Zero => "zero".into(),
        }
    }

    pub fn is_euler(&self) -> bool {
        matches!(self, Alphabet::Euler { .. })
    }

    /// Checks that a letter belongs to the alphabet.
    pub fn validate_letter(&self, a: &Letter) -> Result<()> {
        let ok = a.index >= 1
            && match (self, a.color) {
                (Alphabet::Euler { r }, Some(j)) => j < *r,
                (Alphabet::Euler { .. }, None) => false,
                (_, c) => c.is_none(),
            };
        if ok {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch { letter: a.to_string(), alphabet: self.name() })
        }
    }

    pub fn validate_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|a| self.validate_letter(a))
    }

    /// Letters with index `<= max_index` (and every color for Euler).
    pub fn letter_sample(&self, max_index: u32) -> Vec<Letter> {
        match self {
            Alphabet::Euler { r } => (1..=max_index)
                .flat_map(|i| (0..*r).map(move |j| Letter::colored(i, j, *r)))
                .collect(),
            _ => (1..=max_index).map(Letter::z).collect(),
        }
    }
}

impl Alphabet<PolyScalar> {
    /// The `q` alphabet with `eps` kept as a polynomial variable.
    pub fn q_symbolic() -> Self {
        Alphabet::Q { eps: PolyScalar::var("eps") }
    }
}

impl Alphabet<QSeries> {
    /// The `q` alphabet with `eps = 1 - q` in `Q[[q]]`.
    pub fn q_series() -> Self {
        Alphabet::Q { eps: QSeries::one_minus_q() }
    }
}

impl<R: Scalar> Alphabet<R> {
    pub fn validate(&self, x: &NcPoly<R>) -> Result<()> {
        x.words().try_for_each(|w| self.validate_word(w))
    }

    /// `a ⋄ b` for letters.
    pub fn diamond_letters(&self, a: &Letter, b: &Letter) -> LinComb<R> {
        match self {
            Alphabet::Z => LinComb::letter(Letter::z(a.index + b.index)),
            Alphabet::Q { eps } => {
                let n = a.index + b.index;
                let mut out = LinComb::letter(Letter::z(n));
                out.add_term(Letter::z(n - 1), eps.clone());
                out
            }
            Alphabet::Euler { r } => {
                let j = a.color.unwrap_or(0) + b.color.unwrap_or(0);
                LinComb::letter(Letter::colored(a.index + b.index, j, *r))
            }
            Alphabet::Zero => LinComb::zero(),
        }
    }

    /// Bilinear extension of `⋄` to `kA`.
    pub fn diamond(&self, x: &LinComb<R>, y: &LinComb<R>) -> LinComb<R> {
        let mut out = LinComb::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                let cd = c.clone() * d.clone();
                for (e, k) in self.diamond_letters(a, b).terms() {
                    out.add_term(*e, k.clone() * cd.clone());
                }
            }
        }
        out
    }

    /// `a_1 ⋄ ... ⋄ a_n` for a nonempty run of letters.
    pub fn diamond_run(&self, letters: &[Letter]) -> LinComb<R> {
        let (first, rest) = letters.split_first().expect("diamond of an empty run");
        rest.iter()
            .fold(LinComb::letter(*first), |acc, b| self.diamond(&acc, &LinComb::letter(*b)))
    }

    /// `z^{⋄n}` for `n >= 1`.
    pub fn diamond_power(&self, z: &LinComb<R>, n: usize) -> LinComb<R> {
        assert!(n >= 1, "diamond power needs n >= 1");
        (1..n).fold(z.clone(), |acc, _| self.diamond(&acc, z))
    }

    /// Quasi-shuffle family on words. `fusion` is the sign of the `⋄`
    /// term (`+1` for `*`, `-1` for `⋆`); `None` gives the plain shuffle.
    ///
    /// Bottom-up table over suffix pairs: `table[i][j] = u[i..] • v[j..]`.
    fn quasi_shuffle_words(&self, u: &Word, v: &Word, fusion: Option<R>) -> NcPoly<R> {
        let (a, b) = (u.letters(), v.letters());
        let (n, m) = (a.len(), b.len());
        let width = m + 1;
        let mut table: Vec<NcPoly<R>> = vec![NcPoly::zero(); (n + 1) * width];
        for i in (0..=n).rev() {
            for j in (0..=m).rev() {
                let cell = if i == n {
                    NcPoly::word(v.slice(j, m))
                } else if j == m {
                    NcPoly::word(u.slice(i, n))
                } else {
                    let mut acc = table[(i + 1) * width + j].left_mul(&LinComb::letter(a[i]));
                    acc += table[i * width + j + 1].left_mul(&LinComb::letter(b[j]));
                    if let Some(sign) = &fusion {
                        let fused = self.diamond_letters(&a[i], &b[j]).scale(sign);
                        if !fused.is_zero() {
                            acc += table[(i + 1) * width + j + 1].left_mul(&fused);
                        }
                    }
                    acc
                };
                table[i * width + j] = cell;
            }
        }
        table.swap_remove(0)
    }

    /// Extended `⋄` on words: `w'a ⋄ bv' = w'(a⋄b)v'`, `1 ⋄ w = w ⋄ 1 = w`.
    pub fn diamond_words(&self, u: &Word, v: &Word) -> NcPoly<R> {
        match (u.letters().split_last(), v.letters().split_first()) {
            (None, _) => NcPoly::word(v.clone()),
            (_, None) => NcPoly::word(u.clone()),
            (Some((a, head)), Some((b, tail))) => {
                let head = Word::new(head.to_vec());
                let tail = Word::new(tail.to_vec());
                let mut out = NcPoly::zero();
                for (c, k) in self.diamond_letters(a, b).terms() {
                    let w = head.concat(&Word::letter(*c)).concat(&tail);
                    out.add_term(w, k.clone());
                }
                out
            }
        }
    }

    /// Product of two words in the given mode.
    pub fn product_words(&self, mode: Product, u: &Word, v: &Word) -> NcPoly<R> {
        match mode {
            Product::Qsh => self.quasi_shuffle_words(u, v, Some(R::one())),
            Product::Star => self.quasi_shuffle_words(u, v, Some(-R::one())),
            Product::Shuffle => self.quasi_shuffle_words(u, v, None),
            Product::Diamond => self.diamond_words(u, v),
            Product::Concat => NcPoly::word(u.concat(v)),
        }
    }

    /// Bilinear extension of [`Alphabet::product_words`].
    pub fn product(&self, mode: Product, x: &NcPoly<R>, y: &NcPoly<R>) -> NcPoly<R> {
        let mut out = NcPoly::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                out += self.product_words(mode, u, v).scale(&(a.clone() * b.clone()));
            }
        }
        out
    }

    pub fn qsh(&self, x: &NcPoly<R>, y: &NcPoly<R>) -> NcPoly<R> {
        self.product(Product::Qsh, x, y)
    }

    pub fn qsh_star(&self, x: &NcPoly<R>, y: &NcPoly<R>) -> NcPoly<R> {
        self.product(Product::Star, x, y)
    }

    pub fn shuffle(&self, x: &NcPoly<R>, y: &NcPoly<R>) -> NcPoly<R> {
        self.product(Product::Shuffle, x, y)
    }

    pub fn diamond_extend(&self, x: &NcPoly<R>, y: &NcPoly<R>) -> NcPoly<R> {
        self.product(Product::Diamond, x, y)
    }

    /// Componentwise product on `k<A> ⊗ k<A>`.
    pub fn tensor_product(&self, mode: Product, x: &Tensor<R>, y: &Tensor<R>) -> Tensor<R> {
        let mut out = Tensor::zero();
        for ((u1, v1), a) in x.terms() {
            for ((u2, v2), b) in y.terms() {
                let left = self.product_words(mode, u1, u2);
                let right = self.product_words(mode, v1, v2);
                out += Tensor::outer(&left, &right).scale(&(a.clone() * b.clone()));
            }
        }
        out
    }

    /// The same alphabet over another coefficient ring.
    pub fn try_map<S: Scalar>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Alphabet<S>> {
        Ok(match self {
            Alphabet::Z => Alphabet::Z,
            Alphabet::Q { eps } => Alphabet::Q { eps: f(eps)? },
            Alphabet::Euler { r } => Alphabet::Euler { r: *r },
            Alphabet::Zero => Alphabet::Zero,
        })
    }
}
