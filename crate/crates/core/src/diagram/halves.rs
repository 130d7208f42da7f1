use super::model::{Chirality, ComponentKind, CrossingId, PassRef, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::Word;

/// Which half of a classical self-crossing contains the basepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZMembership {
    InPositive,
    InNegative,
}

/// The based halves of a self-crossing of a closed component.
/// `positive`/`negative` are `None` on flat diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfExtraction {
    pub positive: Option<Word>,
    pub negative: Option<Word>,
    pub left: Word,
    pub right: Word,
    /// The basepoint lies on the left half.
    pub z_in_left: bool,
    pub z_membership: Option<ZMembership>,
}

impl HalfExtraction {
    /// The product of the two halves taken so that the one avoiding the
    /// basepoint comes first. Equals the component class.
    pub fn loop_product(&self) -> Word {
        if self.z_in_left {
            self.right.mul(&self.left)
        } else {
            self.left.mul(&self.right)
        }
    }
}

impl TangleDiagram {
    /// Class of the sub-walk that leaves pass `from`, runs forward along the
    /// component and stops at pass `to` (wrapping past the basepoint if needed).
    pub fn half_word(&self, from: PassRef, to: PassRef) -> Word {
        debug_assert_eq!(from.component, to.component);
        let w = self.prefix(to).mul(&self.prefix(from).inverse());
        if from.position < to.position {
            w
        } else {
            w.mul(&self.component_class(from.component))
        }
    }

    /// Start and end of the left half: it starts at the pass whose strand
    /// crosses the other one from right to left.
    pub(crate) fn left_half_ends(&self, id: &CrossingId) -> Result<(PassRef, PassRef)> {
        let [s0, s1] = self.locate(id)?;
        Ok(match self.crossing(id)?.chirality {
            Chirality::Left => (s1, s0),
            Chirality::Right => (s0, s1),
        })
    }

    pub fn extract_halves(&self, id: &CrossingId) -> Result<HalfExtraction> {
        let [s0, s1] = self.locate(id)?;
        if s0.component != s1.component {
            return Err(Error::NotASelfCrossing(id.to_string()));
        }
        if self.component(s0.component).kind != ComponentKind::Closed {
            return Err(Error::ComponentNotClosed(id.to_string()));
        }
        let (ls, le) = self.left_half_ends(id)?;
        let left = self.half_word(ls, le);
        let right = self.half_word(le, ls);
        // the half that wraps past the basepoint is the one containing it
        let z_in_left = ls.position > le.position;
        let (positive, negative, z_membership) = if self.is_flat() {
            (None, None, None)
        } else {
            let pos = self.half_word(s1, s0);
            let neg = self.half_word(s0, s1);
            let m = if s1.position > s0.position { ZMembership::InPositive } else { ZMembership::InNegative };
            (Some(pos), Some(neg), Some(m))
        };
        Ok(HalfExtraction { positive, negative, left, right, z_in_left, z_membership })
    }

    /// Sign of a classical crossing: +1 when the under strand passes from
    /// right to left beneath the over strand.
    pub fn crossing_sign(&self, id: &CrossingId) -> Result<i8> {
        if self.is_flat() {
            return Err(Error::RoleMismatch(format!("crossing {id} is flat and has no sign")));
        }
        Ok(match self.crossing(id)?.chirality {
            Chirality::Left => 1,
            Chirality::Right => -1,
        })
    }

    /// Chirality in the file convention: how the second-visited strand
    /// crosses the first-visited one.
    pub fn visit_chirality(&self, id: &CrossingId) -> Result<Chirality> {
        let [s0, s1] = self.locate(id)?;
        let c = self.crossing(id)?.chirality;
        Ok(if s0 < s1 { c } else { c.flip() })
    }

    /// Component indices (over, under), zero-based. Flat diagrams use
    /// (first-visited, second-visited).
    pub fn component_type(&self, id: &CrossingId) -> Result<(usize, usize)> {
        let [s0, s1] = self.locate(id)?;
        Ok((s0.component, s1.component))
    }

    /// −1 for an early undercrossing of a long component, +1 for an early
    /// overcrossing.
    pub fn order_type(&self, id: &CrossingId) -> Result<i8> {
        if self.is_flat() {
            return Err(Error::RoleMismatch(format!("crossing {id} is flat")));
        }
        let [s0, s1] = self.locate(id)?;
        if s0.component != s1.component {
            return Err(Error::NotASelfCrossing(id.to_string()));
        }
        if self.component(s0.component).kind != ComponentKind::Long {
            return Err(Error::RoleMismatch(format!("crossing {id} lies on a closed component")));
        }
        Ok(if s1 < s0 { -1 } else { 1 })
    }

    /// Homotopy word of a long self-crossing: the loop from the first pass
    /// forward to the second, based at the start of the component.
    pub fn long_loop_word(&self, id: &CrossingId) -> Result<Word> {
        let [s0, s1] = self.locate(id)?;
        if s0.component != s1.component {
            return Err(Error::NotASelfCrossing(id.to_string()));
        }
        let (a, b) = if s0 < s1 { (s0, s1) } else { (s1, s0) };
        Ok(self.prefix(b).mul(&self.prefix(a).inverse()))
    }

    /// Path word of a mixed crossing from the start of component `i` to the
    /// start of component `j`, through the crossing, where `i` is the over
    /// component (or the first-visited one on flat diagrams).
    pub fn mixed_path_word(&self, id: &CrossingId) -> Result<Word> {
        let [s0, s1] = self.locate(id)?;
        if s0.component == s1.component {
            return Err(Error::RoleMismatch(format!("crossing {id} is a self-crossing")));
        }
        Ok(self.prefix(s0).mul(&self.prefix(s1).inverse()))
    }
}
