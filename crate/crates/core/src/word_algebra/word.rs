use std::cmp::Ordering;
use std::fmt;

/// A letter `z_i` (single index) or `z_{i,j}` (Euler alphabet, `j` mod r).
///
/// Letters order by index, then color; plain letters sort before colored
/// ones with the same index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub index: u32,
    pub color: Option<u32>,
}

impl Letter {
    pub const fn z(index: u32) -> Self {
        Letter { index, color: None }
    }

    /// `z_{i,j}` with `j` reduced mod `r`.
    pub const fn colored(index: u32, color: u32, r: u32) -> Self {
        Letter { index, color: Some(color % r) }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color {
            None => write!(f, "z{}", self.index),
            Some(j) => write!(f, "z{},{}", self.index, j),
        }
    }
}

/// A finite sequence of letters. The empty word is the unit `1`.
///
/// Words order by length first, then lexicographically by letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(a: Letter) -> Self {
        Word(vec![a])
    }

    /// Word of plain letters `z_{i_1} ... z_{i_n}`.
    pub fn from_indices(indices: &[u32]) -> Self {
        Word(indices.iter().map(|&i| Letter::z(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the letter indices.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|a| a.index).sum()
    }

    pub fn first(&self) -> Option<&Letter> {
        self.0.first()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, a: Letter) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// All splits `(u, v)` with `uv = self`, from `(1, self)` to `(self, 1)`.
    pub fn splits(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(move |i| (self.slice(0, i), self.slice(i, self.len())))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Every word over `letters` of length `0..=maxlen`, shortest first.
    pub fn all_up_to(letters: &[Letter], maxlen: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..maxlen {
            let mut next = Vec::with_capacity(layer.len() * letters.len());
            for w in &layer {
                for &a in letters {
                    let mut v = w.0.clone();
                    v.push(a);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Letter> for Word {
    fn from(a: Letter) -> Self {
        Word::letter(a)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
