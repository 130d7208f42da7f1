use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result, Violation, ViolationKind};
use crate::group::{SurfacePresentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId(pub String);

impl CrossingId {
    pub fn new(s: impl Into<String>) -> Self {
        CrossingId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for CrossingId {
    fn from(s: &str) -> Self {
        CrossingId(s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Closed,
    Long,
}

/// Which way one strand crosses another, seen along the crossed strand:
/// `Left` means from its right-hand side to its left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::Left => Chirality::Right,
            Chirality::Right => Chirality::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Chirality::Left => 'L',
            Chirality::Right => 'R',
        }
    }
}

/// Slot of a pass within its crossing. Classical: slot 0 is the over-pass.
/// Flat: slot 0 is whichever pass comes first in walk order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: CrossingId,
    pub slot: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub name: String,
    pub kind: ComponentKind,
    /// `words.len() == passes.len() + 1`; `words[k]` precedes `passes[k]`.
    pub words: Vec<Word>,
    pub passes: Vec<Pass>,
}

impl Component {
    pub fn new(name: impl Into<String>, kind: ComponentKind) -> Self {
        Component { name: name.into(), kind, words: vec![Word::identity()], passes: Vec::new() }
    }

    pub fn is_closed(&self) -> bool {
        self.kind == ComponentKind::Closed
    }

    /// Product of all segment words.
    pub fn total_word(&self) -> Word {
        self.words.iter().fold(Word::identity(), |acc, w| acc.mul(w))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PassRef {
    pub component: usize,
    pub position: usize,
}

/// Per-crossing data. `chirality` says how the slot-1 strand crosses the
/// slot-0 strand, so a classical crossing is positive exactly when it is
/// `Left` (the under strand passes from right to left below the over strand).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: CrossingId,
    pub chirality: Chirality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleDiagram {
    surface: SurfacePresentation,
    components: Vec<Component>,
    crossings: BTreeMap<CrossingId, Crossing>,
    flat: bool,
    locations: BTreeMap<CrossingId, [PassRef; 2]>,
    prefixes: Vec<Vec<Word>>,
}

impl TangleDiagram {
    /// Validates the parts and builds the diagram. Flat crossings are
    /// renormalized so that slot 0 is the pass met first.
    pub fn from_parts(
        surface: SurfacePresentation,
        components: Vec<Component>,
        crossings: BTreeMap<CrossingId, Crossing>,
        flat: bool,
    ) -> Result<Self> {
        let mut problems = Vec::new();
        let mut push = |kind, message: String| problems.push(Violation { line: None, kind, message });
        if components.is_empty() {
            push(ViolationKind::Structure, "diagram has no components".into());
        }
        let mut names: Vec<&str> = components.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|p| p[0] == p[1]) {
            push(ViolationKind::Structure, "duplicate component name".into());
        }
        let mut seen: BTreeMap<CrossingId, [Option<PassRef>; 2]> = BTreeMap::new();
        for (ci, c) in components.iter().enumerate() {
            if c.words.len() != c.passes.len() + 1 {
                push(ViolationKind::Structure, format!("component {} has mismatched walk", c.name));
            }
            for w in &c.words {
                if let Err(e) = surface.check_word(w) {
                    push(ViolationKind::AlphabetMismatch, format!("component {}: {e}", c.name));
                }
            }
            for (pos, p) in c.passes.iter().enumerate() {
                let here = PassRef { component: ci, position: pos };
                let slot = seen.entry(p.crossing.clone()).or_insert([None, None]);
                if p.slot > 1 || slot[p.slot as usize].is_some() {
                    push(ViolationKind::WrongVisitCount, format!("crossing {} visited too often", p.crossing));
                } else {
                    slot[p.slot as usize] = Some(here);
                }
            }
        }
        let mut locations = BTreeMap::new();
        for (id, slots) in &seen {
            match slots {
                [Some(a), Some(b)] => {
                    locations.insert(id.clone(), [*a, *b]);
                }
                _ => push(ViolationKind::WrongVisitCount, format!("crossing {id} is not visited exactly twice")),
            }
            if !crossings.contains_key(id) {
                push(ViolationKind::Structure, format!("crossing {id} has no chirality or sign"));
            }
        }
        for id in crossings.keys() {
            if !seen.contains_key(id) {
                push(ViolationKind::WrongVisitCount, format!("crossing {id} never visited"));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        let mut d = TangleDiagram { surface, components, crossings, flat, locations, prefixes: Vec::new() };
        if flat {
            d.normalize_flat_slots();
        }
        d.prefixes = d.components.iter().map(prefix_products).collect();
        Ok(d)
    }

    fn normalize_flat_slots(&mut self) {
        let swaps: Vec<CrossingId> =
            self.locations.iter().filter(|(_, [a, b])| a > b).map(|(id, _)| id.clone()).collect();
        for id in swaps {
            let [a, b] = self.locations[&id];
            self.components[a.component].passes[a.position].slot = 1;
            self.components[b.component].passes[b.position].slot = 0;
            self.locations.insert(id.clone(), [b, a]);
            let c = self.crossings.get_mut(&id).expect("crossing present");
            c.chirality = c.chirality.flip();
        }
    }

    pub fn surface(&self) -> &SurfacePresentation {
        &self.surface
    }

    /// Same diagram with a different search bound on its surface group.
    pub fn with_search_bound(mut self, bound: u32) -> Self {
        self.surface = self.surface.with_search_bound(bound);
        self
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Component {
        &self.components[i]
    }

    pub fn crossings(&self) -> &BTreeMap<CrossingId, Crossing> {
        &self.crossings
    }

    pub fn crossing(&self, id: &CrossingId) -> Result<&Crossing> {
        self.crossings.get(id).ok_or_else(|| Error::UnknownCrossing(id.to_string()))
    }

    pub fn is_flat(&self) -> bool {
        self.flat
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Pass locations indexed by slot.
    pub fn locate(&self, id: &CrossingId) -> Result<[PassRef; 2]> {
        self.locations.get(id).copied().ok_or_else(|| Error::UnknownCrossing(id.to_string()))
    }

    /// Crossing ids ordered by their first pass in walk order.
    pub fn crossings_in_walk_order(&self) -> Vec<CrossingId> {
        let mut v: Vec<(PassRef, &CrossingId)> = self.locations.iter().map(|(id, [a, b])| (*a.min(b), id)).collect();
        v.sort();
        v.into_iter().map(|(_, id)| id.clone()).collect()
    }

    pub fn is_self_crossing(&self, id: &CrossingId) -> Result<bool> {
        let [a, b] = self.locate(id)?;
        Ok(a.component == b.component)
    }

    /// Product of the segment words before pass `position`: the class of
    /// the walk from the basepoint to that pass.
    pub fn prefix(&self, at: PassRef) -> &Word {
        &self.prefixes[at.component][at.position]
    }

    /// Class of a closed component; identity for long components.
    pub fn component_class(&self, i: usize) -> Word {
        let c = &self.components[i];
        match c.kind {
            ComponentKind::Closed => c.total_word(),
            ComponentKind::Long => Word::identity(),
        }
    }

    pub fn pass(&self, at: PassRef) -> &Pass {
        &self.components[at.component].passes[at.position]
    }

    /// Smallest unused ids of the form `x<k>`.
    pub fn fresh_ids(&self, n: usize) -> Vec<CrossingId> {
        let mut out = Vec::with_capacity(n);
        let mut k = 1usize;
        while out.len() < n {
            let id = CrossingId(format!("x{k}"));
            if !self.crossings.contains_key(&id) {
                out.push(id);
            }
            k += 1;
        }
        out
    }

    pub(crate) fn into_parts(self) -> (SurfacePresentation, Vec<Component>, BTreeMap<CrossingId, Crossing>, bool) {
        (self.surface, self.components, self.crossings, self.flat)
    }

    pub(crate) fn parts(&self) -> (SurfacePresentation, Vec<Component>, BTreeMap<CrossingId, Crossing>, bool) {
        self.clone().into_parts()
    }
}

fn prefix_products(c: &Component) -> Vec<Word> {
    let mut acc = Word::identity();
    let mut out = Vec::with_capacity(c.passes.len());
    for w in &c.words[..c.passes.len()] {
        acc = acc.mul(w);
        out.push(acc.clone());
    }
    out
}
