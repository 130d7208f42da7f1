//! Equality modulo conjugation by powers, double cosets, roots.

use super::lattice::Lattice;
use super::presentation::{GroupKind, SurfacePresentation};
use super::word::Word;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EqualityVerdict {
    Equal,
    NotEqual,
    /// No witness found with exponents up to the bound; only produced for
    /// closed surfaces of genus at least two.
    Undecided(u32),
}

impl EqualityVerdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            EqualityVerdict::Equal
        } else {
            EqualityVerdict::NotEqual
        }
    }

    pub fn is_equal(self) -> bool {
        self == EqualityVerdict::Equal
    }

    pub fn is_not_equal(self) -> bool {
        self == EqualityVerdict::NotEqual
    }

    pub fn is_decided(self) -> bool {
        !matches!(self, EqualityVerdict::Undecided(_))
    }

    /// Three-valued conjunction.
    pub fn and(self, other: Self) -> Self {
        use EqualityVerdict::*;
        match (self, other) {
            (NotEqual, _) | (_, NotEqual) => NotEqual,
            (Equal, Equal) => Equal,
            (Undecided(b), _) | (_, Undecided(b)) => Undecided(b),
        }
    }

    /// Three-valued disjunction.
    pub fn or(self, other: Self) -> Self {
        use EqualityVerdict::*;
        match (self, other) {
            (Equal, _) | (_, Equal) => Equal,
            (NotEqual, NotEqual) => NotEqual,
            (Undecided(b), _) | (_, Undecided(b)) => Undecided(b),
        }
    }
}

/// Exponent window used by the free-group searches. Beyond it the reduced
/// length of `κⁿ x κ⁻ⁿ` (or `κᵢᵖ x κⱼ^q`) exceeds what an equality with the
/// other word allows.
pub fn free_search_bound(len_x: usize, len_y: usize, len_cyclic: usize) -> i64 {
    let a = (len_x + len_y) / (2 * len_cyclic) + 1;
    let b = (len_x + len_y) / len_cyclic + 2;
    a.max(b) as i64
}

/// `w ∈ ⟨c⟩` for a cyclically reduced nontrivial `c`; returns the exponent.
fn power_of_cyclic(w: &Word, c: &Word) -> Option<i64> {
    if !w.len().is_multiple_of(c.len()) {
        return None;
    }
    let n = (w.len() / c.len()) as i64;
    [n, -n].into_iter().find(|&e| &c.pow(e) == w)
}

fn min_shortlex(it: impl Iterator<Item = Word>) -> Word {
    it.min_by(|a, b| a.shortlex_cmp(b)).unwrap_or_default()
}

impl SurfacePresentation {
    /// Decides `∃n: y = κⁿ x κ⁻ⁿ`.
    pub fn equal_mod_power_conj(&self, x: &Word, y: &Word, kappa: &Word) -> Result<EqualityVerdict> {
        self.check_word(x)?;
        self.check_word(y)?;
        self.check_word(kappa)?;
        if self.is_trivial(kappa)? || matches!(self.kind(), GroupKind::Trivial | GroupKind::Torus) {
            return Ok(EqualityVerdict::from_bool(self.words_equal(x, y)?));
        }
        match self.kind() {
            GroupKind::Free => {
                let (u, c) = kappa.cyclic_decomposition();
                let x1 = u.inverse().conjugate(x);
                let y1 = u.inverse().conjugate(y);
                let bound = free_search_bound(x1.len(), y1.len(), c.len());
                let found = (-bound..=bound).any(|n| c.pow(n).conjugate(&x1) == y1);
                Ok(EqualityVerdict::from_bool(found))
            }
            _ => {
                if self.homology(x) != self.homology(y) {
                    return Ok(EqualityVerdict::NotEqual);
                }
                let k = self.dehn_reduce(kappa);
                let bound = self.search_bound() as i64;
                for n in 0..=bound {
                    for e in [n, -n] {
                        if self.words_equal(&k.pow(e).conjugate(x), y)? {
                            return Ok(EqualityVerdict::Equal);
                        }
                    }
                }
                Ok(EqualityVerdict::Undecided(self.search_bound()))
            }
        }
    }

    /// Decides `∃p,q: y = κᵢᵖ x κⱼ^q`.
    pub fn equal_double_coset(&self, x: &Word, y: &Word, ki: &Word, kj: &Word) -> Result<EqualityVerdict> {
        for w in [x, y, ki, kj] {
            self.check_word(w)?;
        }
        match self.kind() {
            GroupKind::Trivial => Ok(EqualityVerdict::Equal),
            GroupKind::Torus => {
                let lat = Lattice::generated_by(2, &[self.homology(ki), self.homology(kj)]);
                let d: Vec<i64> = self.homology(y).iter().zip(self.homology(x)).map(|(a, b)| a - b).collect();
                Ok(EqualityVerdict::from_bool(lat.contains(&d)))
            }
            GroupKind::Free => Ok(EqualityVerdict::from_bool(self.free_double_coset(x, y, ki, kj))),
            GroupKind::Hyperbolic => {
                let n = self.generators().len();
                let lat = Lattice::generated_by(n, &[self.homology(ki), self.homology(kj)]);
                let d: Vec<i64> = self.homology(y).iter().zip(self.homology(x)).map(|(a, b)| a - b).collect();
                if !lat.contains(&d) {
                    return Ok(EqualityVerdict::NotEqual);
                }
                let ti = self.is_trivial(ki)?;
                let tj = self.is_trivial(kj)?;
                if ti && tj {
                    return Ok(EqualityVerdict::from_bool(self.words_equal(x, y)?));
                }
                let bound = self.search_bound() as i64;
                let prange = if ti { 0..=0 } else { -bound..=bound };
                for p in prange {
                    let left = ki.pow(p).mul(x);
                    let qrange = if tj { 0..=0 } else { -bound..=bound };
                    for q in qrange {
                        if self.words_equal(&left.mul(&kj.pow(q)), y)? {
                            return Ok(EqualityVerdict::Equal);
                        }
                    }
                }
                Ok(EqualityVerdict::Undecided(self.search_bound()))
            }
        }
    }

    fn free_double_coset(&self, x: &Word, y: &Word, ki: &Word, kj: &Word) -> bool {
        match (ki.is_identity(), kj.is_identity()) {
            (true, true) => x == y,
            (true, false) => {
                let (u, c) = kj.cyclic_decomposition();
                power_of_cyclic(&u.inverse().conjugate(&x.inverse().mul(y)), &c).is_some()
            }
            (false, true) => {
                let (u, c) = ki.cyclic_decomposition();
                power_of_cyclic(&u.inverse().conjugate(&y.mul(&x.inverse())), &c).is_some()
            }
            (false, false) => {
                let (ui, ci) = ki.cyclic_decomposition();
                let (uj, cj) = kj.cyclic_decomposition();
                let x1 = ui.inverse().mul(x).mul(&uj);
                let y1 = ui.inverse().mul(y).mul(&uj);
                let bound = free_search_bound(x1.len(), y1.len(), ci.len());
                let xinv = x1.inverse();
                (-bound..=bound).any(|p| power_of_cyclic(&xinv.mul(&ci.pow(-p)).mul(&y1), &cj).is_some())
            }
        }
    }

    /// Least element (shortlex) of the orbit `{κⁿ x κ⁻ⁿ}`, available only
    /// when the orbit search is provably complete.
    pub fn canonical_power_conj(&self, x: &Word, kappa: &Word) -> Result<Option<Word>> {
        self.check_word(x)?;
        self.check_word(kappa)?;
        Ok(match self.kind() {
            GroupKind::Trivial => Some(Word::identity()),
            GroupKind::Torus => Some(self.normal_form(x)?),
            GroupKind::Free if kappa.is_identity() => Some(x.clone()),
            GroupKind::Free => {
                let (u, c) = kappa.cyclic_decomposition();
                let x1 = u.inverse().conjugate(x);
                let bound = free_search_bound(x1.len(), x1.len(), c.len());
                let best = min_shortlex((-bound..=bound).map(|n| c.pow(n).conjugate(&x1)));
                Some(u.conjugate(&best))
            }
            GroupKind::Hyperbolic => None,
        })
    }

    /// Least element of the double coset `⟨κᵢ⟩ x ⟨κⱼ⟩`, when computable.
    pub fn canonical_double_coset(&self, x: &Word, ki: &Word, kj: &Word) -> Result<Option<Word>> {
        for w in [x, ki, kj] {
            self.check_word(w)?;
        }
        Ok(match self.kind() {
            GroupKind::Trivial => Some(Word::identity()),
            GroupKind::Torus => {
                let lat = Lattice::generated_by(2, &[self.homology(ki), self.homology(kj)]);
                Some(self.from_homology(&lat.reduce(&self.homology(x))))
            }
            GroupKind::Free => Some(self.free_canonical_double_coset(x, ki, kj)),
            GroupKind::Hyperbolic => None,
        })
    }

    fn free_canonical_double_coset(&self, x: &Word, ki: &Word, kj: &Word) -> Word {
        let (ui, ci) = ki.cyclic_decomposition();
        let (uj, cj) = kj.cyclic_decomposition();
        let x1 = ui.inverse().mul(x).mul(&uj);
        let window = |len_a: usize, c: &Word| -> i64 {
            if c.is_identity() {
                0
            } else {
                free_search_bound(len_a, x1.len(), c.len())
            }
        };
        let pb = window(x1.len(), &ci);
        let cj = &cj;
        let best = min_shortlex((-pb..=pb).flat_map(|p| {
            let left = ci.pow(p).mul(&x1);
            let qb = window(left.len(), cj);
            (-qb..=qb).map(move |q| left.mul(&cj.pow(q)))
        }));
        ui.mul(&best).mul(&uj.inverse())
    }

    /// `κ = root^exponent` with maximal exponent.
    pub fn primitive_root(&self, kappa: &Word) -> Result<(Word, u64)> {
        self.check_word(kappa)?;
        if self.is_trivial(kappa)? {
            return Err(Error::TrivialKappa);
        }
        match self.kind() {
            GroupKind::Free => {
                let (u, c) = kappa.cyclic_decomposition();
                let n = c.len();
                let letters = c.letters();
                let period = (1..=n).find(|&p| n % p == 0 && (p..n).all(|i| letters[i] == letters[i - p])).unwrap_or(n);
                let root = Word::from_letters(letters[..period].iter().copied());
                Ok((u.conjugate(&root), (n / period) as u64))
            }
            GroupKind::Torus => {
                let v = self.homology(kappa);
                let g = gcd(v[0].unsigned_abs(), v[1].unsigned_abs());
                let root: Vec<i64> = v.iter().map(|&e| e / g as i64).collect();
                Ok((self.from_homology(&root), g))
            }
            _ => Err(Error::UnsupportedPresentation(format!("primitive roots on {self}"))),
        }
    }

    pub fn has_square_root(&self, kappa: &Word) -> Result<bool> {
        self.check_word(kappa)?;
        match self.kind() {
            GroupKind::Trivial => Ok(true),
            GroupKind::Free => {
                if kappa.is_identity() {
                    return Ok(true);
                }
                Ok(self.primitive_root(kappa)?.1 % 2 == 0)
            }
            GroupKind::Torus => Ok(self.homology(kappa).iter().all(|e| e % 2 == 0)),
            GroupKind::Hyperbolic => Err(Error::UnsupportedPresentation(format!("square roots on {self}"))),
        }
    }

    /// Canonical representative of the conjugacy class of `x`.
    pub fn conjugacy_canonical(&self, x: &Word) -> Result<Word> {
        self.check_word(x)?;
        match self.kind() {
            GroupKind::Trivial => Ok(Word::identity()),
            GroupKind::Torus => self.normal_form(x),
            GroupKind::Free => {
                let c = x.cyclic_reduction();
                Ok(min_shortlex((0..c.len().max(1)).map(|k| c.rotate(k))))
            }
            GroupKind::Hyperbolic => Err(Error::UnsupportedPresentation(format!("conjugacy classes on {self}"))),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
