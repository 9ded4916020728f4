use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::word_algebra::{Alphabet, LinComb, NcPoly, Word};

/// An ordered tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::EmptyComposition);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|I|`
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `ℓ(I)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Composition of `n` from a break mask: bit `i` set means a break after
    /// position `i + 1`.
    pub fn from_breaks(n: usize, mask: u64) -> Self {
        let mut parts = Vec::new();
        let mut run = 1u32;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Composition(parts)
    }

    /// Inverse of [`Composition::from_breaks`].
    pub fn breaks(&self) -> u64 {
        let mut mask = 0u64;
        let mut pos = 0usize;
        for &p in &self.0[..self.0.len() - 1] {
            pos += p as usize;
            mask |= 1 << (pos - 1);
        }
        mask
    }

    /// `I*`: the composition whose break set is the complement of `I`'s.
    pub fn conjugate(&self) -> Composition {
        let n = self.weight();
        let full = if n <= 1 { 0 } else { (1u64 << (n - 1)) - 1 };
        Composition::from_breaks(n, !self.breaks() & full)
    }

    fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().scan(0usize, |start, &p| {
            let s = *start;
            *start += p as usize;
            Some((s, *start))
        })
    }

    fn check_weight(&self, w: &Word) -> Result<()> {
        if self.weight() != w.len() {
            return Err(Error::WeightMismatch { weight: self.weight(), len: w.len() });
        }
        Ok(())
    }

    /// `I[w]`: fuse the letters inside each block with `⋄`, then concatenate.
    pub fn bracket_action<R: Scalar>(&self, alphabet: &Alphabet<R>, w: &Word) -> Result<NcPoly<R>> {
        self.check_weight(w)?;
        let letters = w.letters();
        let mut out = NcPoly::one();
        for (s, e) in self.blocks() {
            let fused: LinComb<R> = alphabet.diamond_run(&letters[s..e]);
            out = out.concat(&fused.to_poly());
        }
        Ok(out)
    }

    /// `I<w>`: the extended `⋄` of consecutive subword blocks.
    pub fn angle_action<R: Scalar>(&self, alphabet: &Alphabet<R>, w: &Word) -> Result<NcPoly<R>> {
        self.check_weight(w)?;
        let mut blocks = self.blocks().map(|(s, e)| NcPoly::word(w.slice(s, e)));
        let first = blocks.next().expect("composition has a block");
        Ok(blocks.fold(first, |acc, b| alphabet.diamond_extend(&acc, &b)))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All `2^(n-1)` compositions of `n`, in binary-counter order of their break
/// masks: `(n)` first, `(1,...,1)` last.
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::EmptyComposition);
    }
    if n > 63 {
        return Err(Error::OutOfRange {
            what: "composition weight".into(),
            detail: format!("{n} > 63"),
        });
    }
    Ok((0..1u64 << (n - 1)).map(|mask| Composition::from_breaks(n, mask)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;
    use crate::word_algebra::Letter;

    fn comp(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        assert_eq!(compositions(1).unwrap(), vec![comp(&[1])]);
        let c3 = compositions(3).unwrap();
        assert_eq!(c3, vec![comp(&[3]), comp(&[1, 2]), comp(&[2, 1]), comp(&[1, 1, 1])]);
        assert_eq!(compositions(6).unwrap().len(), 32);
        assert!(compositions(0).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(comp(&[2, 1, 2]).conjugate(), comp(&[1, 3, 1]));
        assert_eq!(comp(&[4]).conjugate(), comp(&[1, 1, 1, 1]));
        for n in 1..=7 {
            for c in compositions(n).unwrap() {
                assert_eq!(c.conjugate().conjugate(), c);
                assert_eq!(c.conjugate().len(), n + 1 - c.len());
                assert_eq!(Composition::from_breaks(n, c.breaks()), c);
            }
        }
    }

    #[test]
    fn actions() {
        let z = Alphabet::<Rational>::Z;
        let w = Word::from_indices(&[1, 2, 3, 4, 5]);
        let b = comp(&[2, 1, 2]).bracket_action(&z, &w).unwrap();
        assert_eq!(b, NcPoly::word(Word::from_indices(&[3, 3, 9])));
        assert_eq!(comp(&[1, 3, 1]).angle_action(&z, &w).unwrap(), b);
        let ones = comp(&[1, 1, 1, 1, 1]);
        assert_eq!(ones.bracket_action(&z, &w).unwrap(), NcPoly::word(w.clone()));
        assert_eq!(comp(&[5]).angle_action(&z, &w).unwrap(), NcPoly::word(w.clone()));
        let zz = Word::from_indices(&[1, 1]);
        assert_eq!(comp(&[2]).bracket_action(&z, &zz).unwrap(), NcPoly::word(Word::from_indices(&[2])));
        assert_eq!(comp(&[1, 1]).angle_action(&z, &zz).unwrap(), NcPoly::word(Word::from_indices(&[2])));
        assert!(comp(&[2]).bracket_action(&z, &w).is_err());
    }

    #[test]
    fn bracket_fuses_the_right_letters() {
        // Distinct color bits let the output record which letters were fused.
        let w: Word = (0..5).map(|j| Letter::colored(1, 1 << j, 64)).collect();
        let e64 = Alphabet::<Rational>::Euler { r: 64 };
        let got = comp(&[2, 1, 2]).bracket_action(&e64, &w).unwrap();
        let expected = Word::new(vec![
            Letter::colored(2, 3, 64),
            Letter::colored(1, 4, 64),
            Letter::colored(2, 24, 64),
        ]);
        assert_eq!(got, NcPoly::word(expected));
    }
}
