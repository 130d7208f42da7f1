use std::fmt;

use crate::error::Result;
use crate::group::{EqualityVerdict, SurfacePresentation, Word};

/// A homotopy value together with the quotient it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyValue {
    /// An element of the surface group, compared exactly.
    Exact(Word),
    /// An orbit under conjugation by powers of `kappa`.
    PowerConj { h: Word, kappa: Word },
    /// As `PowerConj`, additionally identifying `x` with `κ x⁻¹`.
    PowerConjInvolution { h: Word, kappa: Word },
    /// A double coset `⟨κᵢ⟩ h ⟨κⱼ⟩`.
    DoubleCoset { h: Word, kappa_i: Word, kappa_j: Word },
}

impl HomotopyValue {
    pub fn representative(&self) -> &Word {
        match self {
            HomotopyValue::Exact(h)
            | HomotopyValue::PowerConj { h, .. }
            | HomotopyValue::PowerConjInvolution { h, .. }
            | HomotopyValue::DoubleCoset { h, .. } => h,
        }
    }

    /// Compares two values. Values of different shapes, or over different
    /// quotients, are never equal.
    pub fn same(&self, other: &HomotopyValue, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        use HomotopyValue::*;
        Ok(match (self, other) {
            (Exact(x), Exact(y)) => EqualityVerdict::from_bool(p.words_equal(x, y)?),
            (PowerConj { h: x, kappa: k }, PowerConj { h: y, kappa: k2 }) => {
                same_quotient(p, k, k2)?.and(p.equal_mod_power_conj(x, y, k)?)
            }
            (PowerConjInvolution { h: x, kappa: k }, PowerConjInvolution { h: y, kappa: k2 }) => {
                let direct = p.equal_mod_power_conj(x, y, k)?;
                let flipped = p.equal_mod_power_conj(x, &k.mul(&y.inverse()), k)?;
                same_quotient(p, k, k2)?.and(direct.or(flipped))
            }
            (DoubleCoset { h: x, kappa_i: a, kappa_j: b }, DoubleCoset { h: y, kappa_i: a2, kappa_j: b2 }) => {
                same_quotient(p, a, a2)?.and(same_quotient(p, b, b2)?).and(p.equal_double_coset(x, y, a, b)?)
            }
            _ => EqualityVerdict::NotEqual,
        })
    }

    /// Least representative, when the quotient admits a provably complete
    /// enumeration on this surface.
    pub fn canonical(&self, p: &SurfacePresentation) -> Result<Option<Word>> {
        Ok(match self {
            HomotopyValue::Exact(h) => match p.kind() {
                crate::group::GroupKind::Hyperbolic => None,
                _ => Some(p.normal_form(h)?),
            },
            HomotopyValue::PowerConj { h, kappa } => p.canonical_power_conj(h, kappa)?,
            HomotopyValue::PowerConjInvolution { h, kappa } => {
                let a = p.canonical_power_conj(h, kappa)?;
                let b = p.canonical_power_conj(&kappa.mul(&h.inverse()), kappa)?;
                a.zip(b).map(|(a, b)| a.min(b))
            }
            HomotopyValue::DoubleCoset { h, kappa_i, kappa_j } => p.canonical_double_coset(h, kappa_i, kappa_j)?,
        })
    }

    /// Text form: the canonical word, or `~` and a reduced representative
    /// when no canonical form is available.
    pub fn render(&self, p: &SurfacePresentation) -> Result<String> {
        Ok(match self.canonical(p)? {
            Some(w) => w.to_string(),
            None => format!("~{}", p.normal_form(self.representative())?),
        })
    }
}

/// The quotient parameters (κ values) only make sense compared on the same
/// component, where they are literally equal; this guards against mixing.
fn same_quotient(p: &SurfacePresentation, a: &Word, b: &Word) -> Result<EqualityVerdict> {
    Ok(EqualityVerdict::from_bool(p.words_equal(a, b)?))
}

/// Classical index value of a crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingIndexValue {
    /// Zero-based (over component, under component).
    pub component_type: (usize, usize),
    /// Present only for self-crossings of long components.
    pub order: Option<i8>,
    pub sign: i8,
    pub homotopy: HomotopyValue,
}

impl CrossingIndexValue {
    /// Tribe-level comparison: component type, order type and homotopy type.
    pub fn same_tribe(&self, other: &Self, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        if self.component_type != other.component_type || self.order != other.order {
            return Ok(EqualityVerdict::NotEqual);
        }
        self.homotopy.same(&other.homotopy, p)
    }

    pub fn same_phratry(&self, other: &Self, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        if self.sign != other.sign {
            return Ok(EqualityVerdict::NotEqual);
        }
        self.same_tribe(other, p)
    }
}

/// Refined flat type: ordered component type, refined order type and the
/// homotopy value without the involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedFlatType {
    pub component_type: (usize, usize),
    pub order: Option<i8>,
    pub homotopy: HomotopyValue,
}

impl RefinedFlatType {
    pub fn same(&self, other: &Self, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        if self.component_type != other.component_type || self.order != other.order {
            return Ok(EqualityVerdict::NotEqual);
        }
        self.homotopy.same(&other.homotopy, p)
    }

    /// The dual type: components swapped, order negated, homotopy value
    /// sent to its partner (`κ x⁻¹` on closed components, the reversed
    /// path between components).
    pub fn dual(&self) -> Self {
        let (i, j) = self.component_type;
        let homotopy = match &self.homotopy {
            HomotopyValue::PowerConj { h, kappa } => {
                HomotopyValue::PowerConj { h: kappa.mul(&h.inverse()), kappa: kappa.clone() }
            }
            HomotopyValue::DoubleCoset { h, kappa_i, kappa_j } => {
                HomotopyValue::DoubleCoset { h: h.inverse(), kappa_i: kappa_j.clone(), kappa_j: kappa_i.clone() }
            }
            other => other.clone(),
        };
        RefinedFlatType { component_type: (j, i), order: self.order.map(|o| -o), homotopy }
    }
}

/// Flat index value of a crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatIndexValue {
    /// Zero-based component indices, smaller first.
    pub component_type: (usize, usize),
    pub homotopy: HomotopyValue,
    pub refined: RefinedFlatType,
}

impl FlatIndexValue {
    pub fn same_tribe(&self, other: &Self, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        if self.component_type != other.component_type {
            return Ok(EqualityVerdict::NotEqual);
        }
        self.homotopy.same(&other.homotopy, p)
    }

    pub fn same_phratry(&self, other: &Self, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        self.refined.same(&other.refined, p)
    }

    pub fn dual_phratry(&self, other: &Self, p: &SurfacePresentation) -> Result<EqualityVerdict> {
        self.refined.same(&other.refined.dual(), p)
    }
}

impl fmt::Display for EqualityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqualityVerdict::Equal => f.write_str("equal"),
            EqualityVerdict::NotEqual => f.write_str("not-equal"),
            EqualityVerdict::Undecided(b) => write!(f, "undecided-within-bound({b})"),
        }
    }
}
