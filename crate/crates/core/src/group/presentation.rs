use std::fmt;

use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// Default exponent bound for searches in closed hyperbolic surface groups.
pub const DEFAULT_SEARCH_BOUND: u32 = 32;

/// Which word-problem strategy a presentation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Sphere or disk.
    Trivial,
    /// Surfaces with boundary.
    Free,
    /// Closed genus one, handled as Z².
    Torus,
    /// Closed genus at least two, handled by Dehn's algorithm.
    Hyperbolic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePresentation {
    genus: u32,
    boundary: u32,
    generators: Vec<u8>,
    relator: Option<Word>,
    search_bound: u32,
}

const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";

impl SurfacePresentation {
    /// Standard presentation of the orientable surface of the given genus
    /// with `boundary` boundary circles.
    ///
    /// Free groups of rank one use the generator `t`, larger free groups use
    /// `a, b, c, …`. Closed surfaces use `a, b, c, d, …` paired as
    /// `(a,b), (c,d), …` with relator `[a,b][c,d]…`.
    pub fn new(genus: u32, boundary: u32) -> Result<Self> {
        let rank = if boundary > 0 { 2 * genus + boundary - 1 } else { 2 * genus };
        if rank as usize > LETTERS.len() {
            return Err(Error::InvalidSurface(format!("rank {rank} exceeds the 26-letter alphabet")));
        }
        let generators: Vec<u8> =
            if boundary > 0 && rank == 1 { vec![b't'] } else { LETTERS[..rank as usize].to_vec() };
        let relator = if boundary == 0 && genus >= 1 {
            let mut letters = Vec::new();
            for i in 0..genus as usize {
                let (a, b) = (generators[2 * i], generators[2 * i + 1]);
                letters.extend([
                    Letter::new(a, false),
                    Letter::new(b, false),
                    Letter::new(a, true),
                    Letter::new(b, true),
                ]);
            }
            Some(Word::from_letters(letters))
        } else {
            None
        };
        Ok(SurfacePresentation { genus, boundary, generators, relator, search_bound: DEFAULT_SEARCH_BOUND })
    }

    pub fn sphere() -> Self {
        Self::new(0, 0).expect("sphere")
    }

    pub fn disk() -> Self {
        Self::new(0, 1).expect("disk")
    }

    pub fn annulus() -> Self {
        Self::new(0, 2).expect("annulus")
    }

    pub fn torus() -> Self {
        Self::new(1, 0).expect("torus")
    }

    /// Same surface with a different generator alphabet and, for closed
    /// surfaces, a different relator. The relator must be a surface word:
    /// cyclically reduced, length `4·genus`, every generator once with
    /// each sign.
    pub fn with_alphabet(mut self, generators: Vec<u8>, relator: Option<Word>) -> Result<Self> {
        let expected = self.generators.len();
        if generators.len() != expected {
            return Err(Error::InvalidSurface(format!("expected {expected} generators, got {}", generators.len())));
        }
        let mut sorted = generators.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != generators.len() || !generators.iter().all(|c| c.is_ascii_lowercase()) {
            return Err(Error::InvalidSurface("generators must be distinct lowercase letters".into()));
        }
        let relator = match (self.relator.is_some(), relator) {
            (false, Some(_)) => return Err(Error::InvalidSurface("only closed surfaces carry a relator".into())),
            (false, None) => None,
            (true, None) => {
                let map: Vec<(u8, u8)> = self.generators.iter().copied().zip(generators.iter().copied()).collect();
                let old = self.relator.clone().expect("closed surface relator");
                Some(Word::from_letters(old.letters().iter().map(|l| {
                    let s = map.iter().find(|(o, _)| *o == l.symbol).map(|p| p.1).unwrap_or(l.symbol);
                    Letter::new(s, l.inverse)
                })))
            }
            (true, Some(r)) => {
                let ok_len = r.len() == 4 * self.genus as usize && r.cyclic_reduction().len() == r.len();
                let ok_letters = generators.iter().all(|&g| {
                    let pos = r.letters().iter().filter(|l| l.symbol == g && !l.inverse).count();
                    let neg = r.letters().iter().filter(|l| l.symbol == g && l.inverse).count();
                    pos == 1 && neg == 1
                });
                if !ok_len || !ok_letters {
                    return Err(Error::InvalidSurface(format!("'{r}' is not a surface relator")));
                }
                Some(r)
            }
        };
        self.generators = generators;
        self.relator = relator;
        Ok(self)
    }

    pub fn with_search_bound(mut self, bound: u32) -> Self {
        self.search_bound = bound;
        self
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> u32 {
        self.boundary
    }

    pub fn generators(&self) -> &[u8] {
        &self.generators
    }

    pub fn relator(&self) -> Option<&Word> {
        self.relator.as_ref()
    }

    pub fn search_bound(&self) -> u32 {
        self.search_bound
    }

    pub fn kind(&self) -> GroupKind {
        match (self.genus, self.boundary) {
            (0, 0) | (0, 1) => GroupKind::Trivial,
            (_, b) if b > 0 => GroupKind::Free,
            (1, 0) => GroupKind::Torus,
            _ => GroupKind::Hyperbolic,
        }
    }

    /// True when the alphabet and relator are the ones `new` produces.
    pub fn is_standard(&self) -> bool {
        SurfacePresentation::new(self.genus, self.boundary)
            .map(|s| s.generators == self.generators && s.relator == self.relator)
            .unwrap_or(false)
    }

    /// Abelian groups: trivial, Z (annulus) and Z² (torus).
    pub fn is_abelian(&self) -> bool {
        match self.kind() {
            GroupKind::Trivial | GroupKind::Torus => true,
            GroupKind::Free => self.generators.len() == 1,
            GroupKind::Hyperbolic => false,
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| !self.generators.contains(&l.symbol)) {
            Some(l) => Err(Error::UnknownGenerator(l.as_char())),
            None => Ok(()),
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let w = Word::parse(text)?;
        self.check_word(&w)?;
        Ok(w)
    }

    /// First homology class as exponent sums over the generators. Surface
    /// relators have zero exponent sum, so this is exact for every kind.
    pub fn homology(&self, w: &Word) -> Vec<i64> {
        w.exponent_vector(&self.generators)
    }

    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(match self.kind() {
            GroupKind::Trivial => Word::identity(),
            GroupKind::Free => w.clone(),
            GroupKind::Torus => self.from_homology(&self.homology(w)),
            GroupKind::Hyperbolic => self.dehn_reduce(w),
        })
    }

    /// The word `g1^e1 g2^e2 …` for an exponent vector.
    pub fn from_homology(&self, v: &[i64]) -> Word {
        let mut letters = Vec::new();
        for (&g, &e) in self.generators.iter().zip(v) {
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::new(g, e < 0));
            }
        }
        Word::from_letters(letters)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }

    pub fn words_equal(&self, x: &Word, y: &Word) -> Result<bool> {
        self.check_word(x)?;
        self.check_word(y)?;
        self.is_trivial(&x.mul(&y.inverse()))
    }

    /// Dehn's algorithm: repeatedly replaces a subword that is more than half
    /// of a cyclic permutation of the relator (or its inverse) by the inverse
    /// of the complementary part.
    pub fn dehn_reduce(&self, w: &Word) -> Word {
        let Some(rel) = &self.relator else { return w.clone() };
        let n = rel.len();
        let mut cyclic: Vec<Vec<Letter>> = Vec::with_capacity(2 * n);
        for r in [rel.clone(), rel.inverse()] {
            for k in 0..n {
                cyclic.push(r.rotate(k).letters().to_vec());
            }
        }
        let half = n / 2 + 1;
        let mut cur = w.letters().to_vec();
        'outer: loop {
            for start in 0..cur.len() {
                for r in &cyclic {
                    let mut m = 0;
                    while m < n && start + m < cur.len() && cur[start + m] == r[m] {
                        m += 1;
                    }
                    if m >= half {
                        let replacement: Vec<Letter> = r[m..].iter().rev().map(|l| l.inv()).collect();
                        let mut next = cur[..start].to_vec();
                        next.extend(replacement);
                        next.extend_from_slice(&cur[start + m..]);
                        cur = Word::from_letters(next).letters().to_vec();
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Word::from_reduced_vec(cur)
    }
}

impl fmt::Display for SurfacePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "surface genus={} boundary={}", self.genus, self.boundary)?;
        if !self.is_standard() {
            let g: String = self.generators.iter().map(|&c| c as char).collect();
            write!(f, " generators={g}")?;
            if let Some(r) = &self.relator {
                write!(f, " relator={r}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn alphabets() {
        assert_eq!(SurfacePresentation::annulus().generators(), b"t");
        assert_eq!(SurfacePresentation::disk().generators(), b"");
        assert_eq!(SurfacePresentation::new(2, 1).unwrap().generators(), b"abcd");
        let g2 = SurfacePresentation::new(2, 0).unwrap();
        assert_eq!(g2.relator().unwrap().to_string(), "abABcdCD");
        assert_eq!(g2.kind(), GroupKind::Hyperbolic);
    }

    #[test]
    fn normal_forms() {
        let t = SurfacePresentation::torus();
        assert_eq!(t.normal_form(&w("babA")).unwrap().to_string(), "bb");
        let s = SurfacePresentation::sphere();
        assert_eq!(s.normal_form(&w("x")), Err(Error::UnknownGenerator('x')));
        let f = SurfacePresentation::new(0, 3).unwrap();
        assert_eq!(f.normal_form(&w("abAaB")).unwrap().to_string(), "a");
    }

    #[test]
    fn equality() {
        let f = SurfacePresentation::new(0, 3).unwrap();
        assert!(f.words_equal(&w("abab"), &w("ab ab")).unwrap());
        let t = SurfacePresentation::torus();
        assert!(t.words_equal(&w("ab"), &w("ba")).unwrap());
        let g2 = SurfacePresentation::new(2, 0).unwrap();
        assert!(g2.words_equal(&w("abABcdCD"), &w("")).unwrap());
        assert!(!g2.words_equal(&w("ab"), &w("ba")).unwrap());
        // a rotation of the relator is trivial, half of it equals the inverse of the other half
        assert!(g2.words_equal(&w("cdCDabAB"), &w("1")).unwrap());
        assert!(g2.words_equal(&w("abABc"), &w("dcD")).unwrap());
    }

    #[test]
    fn custom_relator() {
        let p = SurfacePresentation::new(2, 0).unwrap().with_alphabet(b"abcd".to_vec(), Some(w("abcdABCD"))).unwrap();
        assert!(p.words_equal(&w("abcd"), &w("dcba")).unwrap());
        assert!(!p.is_standard());
        assert!(SurfacePresentation::torus().with_alphabet(b"ab".to_vec(), Some(w("aabb"))).is_err());
    }
}
