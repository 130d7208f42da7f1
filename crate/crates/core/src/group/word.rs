use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One generator or its inverse. `symbol` is a lowercase ASCII letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: u8, inverse: bool) -> Self {
        Letter { symbol, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { symbol: self.symbol, inverse: !self.inverse }
    }

    pub fn as_char(self) -> char {
        if self.inverse {
            (self.symbol as char).to_ascii_uppercase()
        } else {
            self.symbol as char
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        if !c.is_ascii_alphabetic() {
            return None;
        }
        Some(Letter { symbol: c.to_ascii_lowercase() as u8, inverse: c.is_ascii_uppercase() })
    }
}

/// A freely reduced word. Every constructor reduces, so two equal words
/// of the free group are always structurally equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Parses the textual syntax: lowercase generator, uppercase inverse,
    /// `1` or the empty string for the identity. Whitespace and a pair of
    /// surrounding double quotes are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t.strip_prefix('"').and_then(|s| s.strip_suffix('"')).unwrap_or(t);
        let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::with_capacity(compact.len());
        for c in compact.chars() {
            letters.push(Letter::from_char(c).ok_or_else(|| Error::WordSyntax(text.to_string()))?);
        }
        Ok(Word::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Same as [`Word::is_identity`]; words are stored reduced.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// `self^n`, negative exponents allowed.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `self · x · self⁻¹`
    pub fn conjugate(&self, x: &Word) -> Word {
        self.mul(x).mul(&self.inverse())
    }

    /// Splits a reduced word as `u · c · u⁻¹` with `c` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (Word, Word) {
        let w = &self.0;
        let mut i = 0;
        while w.len() >= 2 * (i + 1) && w[i] == w[w.len() - 1 - i].inv() {
            i += 1;
        }
        (Word(w[..i].to_vec()), Word(w[i..w.len() - i].to_vec()))
    }

    pub fn cyclic_reduction(&self) -> Word {
        self.cyclic_decomposition().1
    }

    /// Cyclic rotation by `k` letters (only meaningful on cyclically reduced words).
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Applies a letter substitution homomorphism.
    pub fn substitute<F: Fn(u8) -> Word>(&self, image: F) -> Word {
        let mut acc = Word::identity();
        for l in &self.0 {
            let w = image(l.symbol);
            acc = acc.mul(&if l.inverse { w.inverse() } else { w });
        }
        acc
    }

    /// Exponent sum of each symbol in `alphabet`.
    pub fn exponent_vector(&self, alphabet: &[u8]) -> Vec<i64> {
        let mut v = vec![0i64; alphabet.len()];
        for l in &self.0 {
            if let Some(i) = alphabet.iter().position(|&s| s == l.symbol) {
                v[i] += if l.inverse { -1 } else { 1 };
            }
        }
        v
    }

    /// Shortlex comparison: shorter first, then letterwise with a < A < b < B.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub(crate) fn from_reduced_vec(v: Vec<Letter>) -> Word {
        debug_assert!(v.windows(2).all(|p| p[0] != p[1].inv()));
        Word(v)
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inv()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn free_reduce(letters: &[Letter]) -> Word {
    Word::from_letters(letters.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(w("a A b"), w("b"));
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("abBa").to_string(), "aa");
        assert_eq!(w("1").to_string(), "1");
        assert_eq!(w("\"t\"").to_string(), "t");
    }

    #[test]
    fn cyclic_parts() {
        let (u, c) = w("abcBA").cyclic_decomposition();
        assert_eq!(u.to_string(), "ab");
        assert_eq!(c.to_string(), "c");
        assert_eq!(w("bAB").cyclic_reduction(), w("A"));
    }

    #[test]
    fn powers_and_inverse() {
        assert_eq!(w("ab").pow(3).to_string(), "ababab");
        assert_eq!(w("ab").pow(-1).to_string(), "BA");
        assert_eq!(w("ab").mul(&w("ab").inverse()), Word::identity());
    }

    #[test]
    fn rejects_junk() {
        assert!(Word::parse("a1b").is_err());
        assert!(Word::parse("a-b").is_err());
    }
}
