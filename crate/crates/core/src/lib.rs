//! Crossing classification for tangle diagrams on oriented surfaces.
//!
//! Diagrams are Gauss-code walks whose edges carry surface-group words.
//! From these the crate computes component, order and homotopy types of
//! crossings, groups crossings into tribes and phratries, applies
//! Reidemeister moves with crossing correspondences, and explores move
//! space to cross-check the classification.

pub mod classify;
pub mod diagram;
pub mod error;
pub mod explore;
pub mod group;
pub mod moves;

pub use diagram::{parse_diagram, serialize, Chirality, CrossingId, TangleDiagram};
pub use error::{Error, Result, Violation, ViolationKind};
pub use group::{EqualityVerdict, GroupKind, Letter, SurfacePresentation, Word};
