//! Crossing types, tribes and phratries.

mod labels;
mod polynomial;
mod universal;
mod value;

pub use labels::{classical_labeling, classify_report, flat_labeling, Labeling, ReportLine};
pub use polynomial::{index_polynomial, IndexPolynomial, PolyKey, Selector};
pub use universal::{universal_index, Coarsening, UniversalValue};
pub use value::{CrossingIndexValue, FlatIndexValue, HomotopyValue, RefinedFlatType};

use crate::diagram::{Chirality, ComponentKind, CrossingId, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::EqualityVerdict;

fn require_classical(d: &TangleDiagram) -> Result<()> {
    if d.is_flat() {
        return Err(Error::RoleMismatch("operation needs a classical diagram".into()));
    }
    Ok(())
}

fn require_flat(d: &TangleDiagram) -> Result<()> {
    if !d.is_flat() {
        return Err(Error::RoleMismatch("operation needs a flat diagram".into()));
    }
    Ok(())
}

pub fn classify(d: &TangleDiagram, v: &CrossingId) -> Result<CrossingIndexValue> {
    require_classical(d)?;
    let [over, under] = d.locate(v)?;
    let sign = d.crossing_sign(v)?;
    let component_type = (over.component, under.component);
    let (order, homotopy) = if over.component != under.component {
        let homotopy = HomotopyValue::DoubleCoset {
            h: d.mixed_path_word(v)?,
            kappa_i: d.component_class(over.component),
            kappa_j: d.component_class(under.component),
        };
        (None, homotopy)
    } else if d.component(over.component).kind == ComponentKind::Long {
        (Some(d.order_type(v)?), HomotopyValue::Exact(d.long_loop_word(v)?))
    } else {
        let halves = d.extract_halves(v)?;
        let h = halves.positive.expect("classical halves");
        (None, HomotopyValue::PowerConj { h, kappa: d.component_class(over.component) })
    };
    Ok(CrossingIndexValue { component_type, order, sign, homotopy })
}

pub fn flat_classify(d: &TangleDiagram, v: &CrossingId) -> Result<FlatIndexValue> {
    require_flat(d)?;
    let [s0, s1] = d.locate(v)?;
    let (ci, cj) = (s0.component, s1.component);
    let chirality = d.crossing(v)?.chirality;
    // the refined component type starts at the strand that is crossed from right to left
    let refined_pair = match chirality {
        Chirality::Left => (ci, cj),
        Chirality::Right => (cj, ci),
    };
    if ci != cj {
        // slot 0 is met first and components are walked in order, so ci < cj
        let kappa = |c: usize| d.component_class(c);
        let h = d.mixed_path_word(v)?;
        let homotopy = HomotopyValue::DoubleCoset { h: h.clone(), kappa_i: kappa(ci), kappa_j: kappa(cj) };
        let refined_h = if refined_pair.0 == ci { h } else { h.inverse() };
        let refined = RefinedFlatType {
            component_type: refined_pair,
            order: None,
            homotopy: HomotopyValue::DoubleCoset {
                h: refined_h,
                kappa_i: kappa(refined_pair.0),
                kappa_j: kappa(refined_pair.1),
            },
        };
        return Ok(FlatIndexValue { component_type: (ci, cj), homotopy, refined });
    }
    if d.component(ci).kind == ComponentKind::Long {
        let h = d.long_loop_word(v)?;
        let (start, end) = d.left_half_ends(v)?;
        let refined = RefinedFlatType {
            component_type: (ci, ci),
            order: Some(if start < end { 1 } else { -1 }),
            homotopy: HomotopyValue::Exact(h.clone()),
        };
        return Ok(FlatIndexValue { component_type: (ci, ci), homotopy: HomotopyValue::Exact(h), refined });
    }
    let halves = d.extract_halves(v)?;
    let kappa = d.component_class(ci);
    let homotopy = HomotopyValue::PowerConjInvolution { h: halves.left.clone(), kappa: kappa.clone() };
    let refined = RefinedFlatType {
        component_type: (ci, ci),
        order: None,
        homotopy: HomotopyValue::PowerConj { h: halves.left, kappa },
    };
    Ok(FlatIndexValue { component_type: (ci, ci), homotopy, refined })
}

pub fn same_tribe(d: &TangleDiagram, v: &CrossingId, w: &CrossingId) -> Result<EqualityVerdict> {
    classify(d, v)?.same_tribe(&classify(d, w)?, d.surface())
}

pub fn same_phratry(d: &TangleDiagram, v: &CrossingId, w: &CrossingId) -> Result<EqualityVerdict> {
    classify(d, v)?.same_phratry(&classify(d, w)?, d.surface())
}

pub fn flat_same_tribe(d: &TangleDiagram, v: &CrossingId, w: &CrossingId) -> Result<EqualityVerdict> {
    flat_classify(d, v)?.same_tribe(&flat_classify(d, w)?, d.surface())
}

pub fn flat_same_phratry(d: &TangleDiagram, v: &CrossingId, w: &CrossingId) -> Result<EqualityVerdict> {
    flat_classify(d, v)?.same_phratry(&flat_classify(d, w)?, d.surface())
}

pub fn flat_dual_phratry(d: &TangleDiagram, v: &CrossingId, w: &CrossingId) -> Result<EqualityVerdict> {
    flat_classify(d, v)?.dual_phratry(&flat_classify(d, w)?, d.surface())
}

/// `(δˡ)² = κ` for a self-crossing of a closed component of a flat diagram.
pub fn is_self_dual(d: &TangleDiagram, v: &CrossingId) -> Result<bool> {
    require_flat(d)?;
    let [s0, _] = d.locate(v)?;
    let halves = d.extract_halves(v)?;
    d.surface().words_equal(&halves.left.pow(2), &d.component_class(s0.component))
}
