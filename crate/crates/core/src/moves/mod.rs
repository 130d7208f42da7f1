//! Reidemeister moves on walk-encoded diagrams, with crossing
//! correspondences, duality weights and the pulling constructions.

mod apply;
mod enumerate;
mod macros;
mod r3;
mod splice;
mod trace;

pub use enumerate::{enumerate_moves, MoveBudget};
pub use enumerate::{insertion_points, word_dictionary};
pub use macros::{pull_crossing, pull_sprout, random_walk, WalkConfig};
pub use splice::Point;
pub use trace::{replay_moves, MoveTrace, TraceStep};

use crate::diagram::{Chirality, CrossingId, TangleDiagram};
use crate::error::Result;
use crate::group::Word;

/// A single Reidemeister move with its site.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// Kink at `at`. `chirality` is how the second pass crosses the first.
    R1Add {
        id: CrossingId,
        at: Point,
        over_first: bool,
        chirality: Chirality,
    },
    R1Remove {
        id: CrossingId,
    },
    /// Strand A leaves `a` along `u`, crosses strand B at `x` then `y`
    /// and returns along `u⁻¹`. B meets `x` first unless `reverse`.
    /// `chirality` is how A crosses B at `x`.
    R2Add {
        x: CrossingId,
        y: CrossingId,
        a: Point,
        b: Point,
        u: Word,
        a_over: bool,
        chirality: Chirality,
        reverse: bool,
    },
    R2Remove {
        x: CrossingId,
        y: CrossingId,
    },
    R3 {
        crossings: [CrossingId; 3],
    },
}

impl Move {
    pub fn is_removal(&self) -> bool {
        matches!(self, Move::R1Remove { .. } | Move::R2Remove { .. })
    }

    pub fn is_insertion(&self) -> bool {
        matches!(self, Move::R1Add { .. } | Move::R2Add { .. })
    }
}

/// Result of applying a move. Crossings not listed keep their ids.
#[derive(Debug, Clone)]
pub struct Applied {
    pub diagram: TangleDiagram,
    pub created: Vec<CrossingId>,
    pub removed: Vec<CrossingId>,
    /// Crossings created or removed together by a second move; duality weight 1.
    pub dual_pair: Option<(CrossingId, CrossingId)>,
}

/// Applies `m`, returning the new diagram and the correspondence data.
/// Every component's class is preserved; this is checked.
pub fn apply_move(d: &TangleDiagram, m: &Move) -> Result<Applied> {
    let out = apply::apply(d, m)?;
    debug_assert!(classes_preserved(d, &out.diagram));
    Ok(out)
}

/// Each component's class agrees between the two diagrams. Moves keep
/// basepoints fixed up to rotation, which preserves the element itself.
pub fn classes_preserved(before: &TangleDiagram, after: &TangleDiagram) -> bool {
    let p = before.surface();
    before.components().len() == after.components().len()
        && (0..before.components().len())
            .all(|i| p.words_equal(&before.component_class(i), &after.component_class(i)).unwrap_or(false))
}
