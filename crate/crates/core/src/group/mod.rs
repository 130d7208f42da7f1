//! Words and the word problem in surface groups.

mod lattice;
mod presentation;
mod quotient;
mod word;

pub use lattice::Lattice;
pub use presentation::{GroupKind, SurfacePresentation, DEFAULT_SEARCH_BOUND};
pub use quotient::{free_search_bound, EqualityVerdict};
pub use word::{free_reduce, Letter, Word};
