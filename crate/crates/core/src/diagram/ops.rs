use std::collections::BTreeMap;

use super::model::{CrossingId, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::Word;

/// Which pass becomes the over-pass when a flat crossing is lifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftChoice {
    FirstOver,
    SecondOver,
}

impl TangleDiagram {
    /// Swaps the over and under passes at `id`. The strands keep their
    /// geometric position, so the sign flips.
    pub fn crossing_change(&self, id: &CrossingId) -> Result<TangleDiagram> {
        if self.is_flat() {
            return Err(Error::RoleMismatch("crossing change needs a classical diagram".into()));
        }
        let [s0, s1] = self.locate(id)?;
        let (surface, mut comps, mut crossings, flat) = self.parts();
        comps[s0.component].passes[s0.position].slot = 1;
        comps[s1.component].passes[s1.position].slot = 0;
        let c = crossings.get_mut(id).expect("located crossing");
        c.chirality = c.chirality.flip();
        TangleDiagram::from_parts(surface, comps, crossings, flat)
    }

    pub fn flatten(&self) -> TangleDiagram {
        let (surface, comps, crossings, _) = self.parts();
        TangleDiagram::from_parts(surface, comps, crossings, true).expect("flattening keeps validity")
    }

    /// Assigns over/under roles to a flat diagram.
    pub fn lift(&self, choices: &BTreeMap<CrossingId, LiftChoice>) -> Result<TangleDiagram> {
        if !self.is_flat() {
            return Err(Error::RoleMismatch("lift needs a flat diagram".into()));
        }
        let (surface, mut comps, mut crossings, _) = self.parts();
        for id in self.crossings().keys() {
            let choice = choices.get(id).ok_or_else(|| Error::MissingChoice(id.to_string()))?;
            if *choice == LiftChoice::SecondOver {
                let [s0, s1] = self.locate(id)?;
                comps[s0.component].passes[s0.position].slot = 1;
                comps[s1.component].passes[s1.position].slot = 0;
                let c = crossings.get_mut(id).expect("known crossing");
                c.chirality = c.chirality.flip();
            }
        }
        TangleDiagram::from_parts(surface, comps, crossings, false)
    }

    /// Moves the basepoint of closed component `i` forward past its first
    /// pass. The component class is unchanged as a word; the new final
    /// segment carries the inverse of the old first segment.
    pub fn rotate_basepoint(&self, i: usize) -> Result<TangleDiagram> {
        let c = self.component(i);
        if !c.is_closed() {
            return Err(Error::ComponentNotClosed(c.name.clone()));
        }
        let m = c.passes.len();
        if m == 0 {
            return Ok(self.clone());
        }
        let (surface, mut comps, crossings, flat) = self.parts();
        let comp = &mut comps[i];
        let w = &comp.words;
        let w0 = w[0].clone();
        let words: Vec<Word> = if m == 1 {
            vec![w0.mul(&w[1]).mul(&w0), w0.inverse()]
        } else {
            let mut v = vec![w0.mul(&w[1])];
            v.extend_from_slice(&w[2..m]);
            v.push(w[m].mul(&w0));
            v.push(w0.inverse());
            v
        };
        comp.words = words;
        comp.passes.rotate_left(1);
        TangleDiagram::from_parts(surface, comps, crossings, flat)
    }

    /// Changes the anchor tail of crossing `id` by `g`: at each pass the
    /// segment entering it gets `·g` and the segment leaving it gets `g⁻¹·`.
    /// Every path class between crossings and basepoints is unchanged.
    pub fn gauge(&self, id: &CrossingId, g: &Word) -> Result<TangleDiagram> {
        let (surface, mut comps, crossings, flat) = self.parts();
        for at in self.locate(id)? {
            let words = &mut comps[at.component].words;
            words[at.position] = words[at.position].mul(g);
            words[at.position + 1] = g.inverse().mul(&words[at.position + 1]);
        }
        TangleDiagram::from_parts(surface, comps, crossings, flat)
    }
}
