use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::model::{Chirality, Component, ComponentKind, Crossing, CrossingId, Pass, TangleDiagram};
use crate::group::{Letter, SurfacePresentation, Word};

/// Shape of a randomly generated diagram.
#[derive(Debug, Clone)]
pub struct RandomShape {
    pub surface: SurfacePresentation,
    pub crossings: usize,
    pub kinds: Vec<ComponentKind>,
    pub flat: bool,
    pub max_word_len: usize,
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[u8], max_len: usize) -> Word {
    if alphabet.is_empty() {
        return Word::identity();
    }
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::new(*alphabet.choose(rng).expect("alphabet"), rng.gen())))
}

/// A random Gauss-code diagram with random holonomy words. Nothing checks
/// that it embeds in the surface; the data is only internally consistent.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, shape: &RandomShape) -> TangleDiagram {
    assert!(!shape.kinds.is_empty(), "need at least one component");
    let k = shape.kinds.len();
    let mut passes: Vec<Pass> = (0..shape.crossings)
        .flat_map(|i| {
            let id = CrossingId(format!("x{}", i + 1));
            let first: u8 = rng.gen_range(0..2);
            [Pass { crossing: id.clone(), slot: first }, Pass { crossing: id, slot: 1 - first }]
        })
        .collect();
    passes.shuffle(rng);
    let mut comps: Vec<Component> =
        shape.kinds.iter().enumerate().map(|(i, kind)| Component::new(format!("K{}", i + 1), *kind)).collect();
    for p in passes {
        comps[rng.gen_range(0..k)].passes.push(p);
    }
    let alphabet = shape.surface.generators().to_vec();
    for c in &mut comps {
        c.words = (0..=c.passes.len()).map(|_| random_word(rng, &alphabet, shape.max_word_len)).collect();
    }
    let crossings: BTreeMap<CrossingId, Crossing> = (0..shape.crossings)
        .map(|i| {
            let id = CrossingId(format!("x{}", i + 1));
            let chirality = if rng.gen() { Chirality::Left } else { Chirality::Right };
            (id.clone(), Crossing { id, chirality })
        })
        .collect();
    TangleDiagram::from_parts(shape.surface.clone(), comps, crossings, shape.flat).expect("generated diagram is valid")
}
