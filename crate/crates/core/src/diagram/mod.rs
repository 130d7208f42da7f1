//! Tangle diagrams as walks of holonomy words and crossing passes.

mod halves;
mod model;
mod ops;
mod parse;
mod random;

pub use halves::{HalfExtraction, ZMembership};
pub use model::{Chirality, Component, ComponentKind, Crossing, CrossingId, Pass, PassRef, TangleDiagram};
pub use ops::LiftChoice;
pub use parse::{parse_diagram, serialize};
pub use random::{random_diagram, random_word, RandomShape};
