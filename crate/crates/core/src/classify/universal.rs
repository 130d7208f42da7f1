use std::fmt;

use super::{classify, HomotopyValue};
use crate::diagram::{CrossingId, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::{GroupKind, SurfacePresentation, Word};

/// How far the homotopy part of the index is coarsened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coarsening {
    /// Homology class; only on surfaces with abelian fundamental group,
    /// where it is the exact universal value.
    ExactAbelian,
    /// Quotient by powers of the component class.
    ModKappa,
    /// Quotient by the centralizer of the component class.
    ModCentralizer,
}

impl std::str::FromStr for Coarsening {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact-abelian" => Ok(Coarsening::ExactAbelian),
            "mod-kappa" => Ok(Coarsening::ModKappa),
            "mod-centralizer" => Ok(Coarsening::ModCentralizer),
            other => Err(Error::UnsupportedCoarsening(other.to_string())),
        }
    }
}

/// A canonical index value. `homotopy` is `None` when it has no canonical
/// form on this surface; `handle` then carries a representative that must
/// be compared through the quotient predicates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UniversalValue {
    pub component_type: (usize, usize),
    pub order: Option<i8>,
    pub homotopy: Option<Word>,
    pub homology: Option<Vec<i64>>,
    pub handle: Option<Word>,
}

impl fmt::Display for UniversalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ=({},{})", self.component_type.0 + 1, self.component_type.1 + 1)?;
        if let Some(o) = self.order {
            write!(f, " o={o:+}")?;
        }
        if let Some(v) = &self.homology {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, " h=({})", parts.join(","))
        } else if let Some(w) = &self.homotopy {
            write!(f, " h={w}")
        } else if let Some(w) = &self.handle {
            write!(f, " h=~{w}")
        } else {
            Ok(())
        }
    }
}

fn abelian_surface(p: &SurfacePresentation) -> bool {
    matches!(p.kind(), GroupKind::Trivial | GroupKind::Torus)
        || (p.kind() == GroupKind::Free && p.generators().len() == 1)
}

/// Root of `κ` generating its centralizer, or `None` when `κ` is trivial
/// (the centralizer is then the whole group).
fn centralizer_generator(p: &SurfacePresentation, kappa: &Word) -> Result<Option<Word>> {
    if p.is_trivial(kappa)? {
        return Ok(None);
    }
    Ok(Some(p.primitive_root(kappa)?.0))
}

fn coarsen_by_centralizer(p: &SurfacePresentation, h: &HomotopyValue) -> Result<Option<Word>> {
    if p.kind() == GroupKind::Hyperbolic {
        return Err(Error::UnsupportedCoarsening(format!("centralizer quotient on {p}")));
    }
    Ok(match h {
        HomotopyValue::Exact(x) => Some(p.normal_form(x)?),
        HomotopyValue::PowerConj { h, kappa } | HomotopyValue::PowerConjInvolution { h, kappa } => {
            match centralizer_generator(p, kappa)? {
                Some(root) => p.canonical_power_conj(h, &root)?,
                None => Some(p.conjugacy_canonical(h)?),
            }
        }
        HomotopyValue::DoubleCoset { h, kappa_i, kappa_j } => {
            match (centralizer_generator(p, kappa_i)?, centralizer_generator(p, kappa_j)?) {
                (Some(a), Some(b)) => p.canonical_double_coset(h, &a, &b)?,
                // one side is the whole group, so every path is identified
                _ => Some(Word::identity()),
            }
        }
    })
}

pub fn universal_index(d: &TangleDiagram, v: &CrossingId, coarsening: Coarsening) -> Result<UniversalValue> {
    let value = classify(d, v)?;
    let p = d.surface();
    let mut out = UniversalValue {
        component_type: value.component_type,
        order: value.order,
        homotopy: None,
        homology: None,
        handle: None,
    };
    match coarsening {
        Coarsening::ExactAbelian => {
            if !abelian_surface(p) {
                return Err(Error::UnsupportedCoarsening(format!("exact-abelian on {p}")));
            }
            // on abelian groups the power-conjugation orbits are points and
            // double cosets are lattice residues, so the canonical word is exact
            let w = value.homotopy.canonical(p)?.expect("abelian canonical form");
            out.homology = Some(p.homology(&w));
        }
        Coarsening::ModKappa => match value.homotopy.canonical(p)? {
            Some(w) => out.homotopy = Some(w),
            None => out.handle = Some(p.normal_form(value.homotopy.representative())?),
        },
        Coarsening::ModCentralizer => out.homotopy = coarsen_by_centralizer(p, &value.homotopy)?,
    }
    Ok(out)
}
