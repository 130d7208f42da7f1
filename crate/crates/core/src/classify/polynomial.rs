use std::collections::BTreeMap;
use std::fmt;

use super::{classify, CrossingIndexValue};
use crate::diagram::TangleDiagram;
use crate::error::{Error, Result};
use crate::group::EqualityVerdict;

/// Which part of the index the polynomial is graded by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    /// Component type, order type and homotopy class modulo κ.
    Universal,
    HomotopyOnly,
    ComponentOnly,
}

impl std::str::FromStr for Selector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "universal" => Ok(Selector::Universal),
            "homotopy-only" => Ok(Selector::HomotopyOnly),
            "component-only" => Ok(Selector::ComponentOnly),
            other => Err(Error::UnsupportedCoarsening(other.to_string())),
        }
    }
}

pub type PolyKey = super::UniversalValue;

/// `Σ sign(v)·[ι(v)]` with zero terms dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndexPolynomial {
    pub terms: BTreeMap<PolyKey, i64>,
}

impl fmt::Display for IndexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (k, c) in &self.terms {
            writeln!(f, "{c:+} [{k}]")?;
        }
        Ok(())
    }
}

fn key_of(d: &TangleDiagram, v: &CrossingIndexValue, sel: Selector) -> Result<PolyKey> {
    let p = d.surface();
    let (h, handle) = match v.homotopy.canonical(p)? {
        Some(w) => (Some(w), None),
        None => (None, Some(p.normal_form(v.homotopy.representative())?)),
    };
    Ok(match sel {
        Selector::Universal => {
            PolyKey { component_type: v.component_type, order: v.order, homotopy: h, homology: None, handle }
        }
        Selector::HomotopyOnly => {
            PolyKey { component_type: v.component_type, order: None, homotopy: h, homology: None, handle }
        }
        Selector::ComponentOnly => {
            PolyKey { component_type: v.component_type, order: None, homotopy: None, homology: None, handle: None }
        }
    })
}

fn same_key(
    d: &TangleDiagram,
    a: &CrossingIndexValue,
    b: &CrossingIndexValue,
    sel: Selector,
) -> Result<EqualityVerdict> {
    let p = d.surface();
    Ok(match sel {
        Selector::Universal => a.same_tribe(b, p)?,
        Selector::HomotopyOnly => {
            if a.component_type != b.component_type {
                EqualityVerdict::NotEqual
            } else {
                a.homotopy.same(&b.homotopy, p)?
            }
        }
        Selector::ComponentOnly => EqualityVerdict::from_bool(a.component_type == b.component_type),
    })
}

pub fn index_polynomial(d: &TangleDiagram, sel: Selector) -> Result<IndexPolynomial> {
    // crossings are grouped by the quotient predicate; the first member's
    // key names the group, so opaque handles are never split or merged by accident
    let mut groups: Vec<(CrossingIndexValue, PolyKey, i64)> = Vec::new();
    for v in d.crossings_in_walk_order() {
        let value = classify(d, &v)?;
        let mut found = None;
        for (i, (rep, _, _)) in groups.iter().enumerate() {
            match same_key(d, rep, &value, sel)? {
                EqualityVerdict::Equal => {
                    found = Some(i);
                    break;
                }
                EqualityVerdict::NotEqual => {}
                EqualityVerdict::Undecided(b) => return Err(Error::Undecided(b)),
            }
        }
        let sign = i64::from(value.sign);
        match found {
            Some(i) => groups[i].2 += sign,
            None => {
                let key = key_of(d, &value, sel)?;
                groups.push((value, key, sign));
            }
        }
    }
    let terms = groups.into_iter().filter(|g| g.2 != 0).map(|(_, k, c)| (k, c)).collect();
    Ok(IndexPolynomial { terms })
}
