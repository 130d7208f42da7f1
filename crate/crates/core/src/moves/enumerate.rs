use super::apply::bigon_strands;
use super::r3::find_triangle;
use super::{apply_move, Move, Point};
use crate::diagram::{Chirality, CrossingId, TangleDiagram};
use crate::group::{Letter, SurfacePresentation, Word};

/// Bounds on the insertion moves listed by [`enumerate_moves`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveBudget {
    pub max_crossings: usize,
    pub max_word_len: usize,
    /// List R1-add and R2-add moves at all.
    pub insertions: bool,
}

impl Default for MoveBudget {
    fn default() -> Self {
        MoveBudget { max_crossings: 6, max_word_len: 1, insertions: true }
    }
}

/// All freely reduced words of length at most `max_len`, shortlex ordered.
pub fn word_dictionary(p: &SurfacePresentation, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> =
        p.generators().iter().flat_map(|&g| [Letter::new(g, false), Letter::new(g, true)]).collect();
    let mut out = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.letters().last().is_some_and(|&x| x == l.inv()) {
                    continue;
                }
                next.push(w.mul(&Word::letter(l)));
            }
        }
        next.sort_by(|a, b| a.shortlex_cmp(b));
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Insertion points, one per position along each walk. On a closed walk
/// the end of the last word is the start of the first and is skipped.
pub fn insertion_points(d: &TangleDiagram) -> Vec<Point> {
    let mut out = Vec::new();
    for (ci, c) in d.components().iter().enumerate() {
        let last = c.words.len() - 1;
        for (k, w) in c.words.iter().enumerate() {
            for split in 0..=w.len() {
                if c.is_closed() && k == last && split == w.len() && last > 0 {
                    continue;
                }
                out.push(Point { component: ci, word: k, split });
            }
        }
    }
    out
}

fn legal(d: &TangleDiagram, m: &Move) -> bool {
    apply_move(d, m).is_ok()
}

/// Removal sites and R3 sites of `d`, followed by budget-bounded insertions.
pub fn enumerate_moves(d: &TangleDiagram, budget: &MoveBudget) -> Vec<Move> {
    let ids: Vec<CrossingId> = d.crossings_in_walk_order();
    let mut out = Vec::new();
    for v in &ids {
        let m = Move::R1Remove { id: v.clone() };
        if legal(d, &m) {
            out.push(m);
        }
    }
    for (i, x) in ids.iter().enumerate() {
        for y in &ids[i + 1..] {
            if (0..2).all(|k| bigon_strands(d, x, y, k).ok().flatten().is_none()) {
                continue;
            }
            let m = Move::R2Remove { x: x.clone(), y: y.clone() };
            if legal(d, &m) {
                out.push(m);
            }
        }
    }
    for (i, a) in ids.iter().enumerate() {
        for (j, b) in ids.iter().enumerate().skip(i + 1) {
            for c in &ids[j + 1..] {
                let tri = [a.clone(), b.clone(), c.clone()];
                if find_triangle(d, &tri).ok().flatten().is_none() {
                    continue;
                }
                let m = Move::R3 { crossings: tri };
                if legal(d, &m) {
                    out.push(m);
                }
            }
        }
    }
    if budget.insertions {
        out.extend(insertions(d, budget));
    }
    out
}

fn insertions(d: &TangleDiagram, budget: &MoveBudget) -> Vec<Move> {
    let mut out = Vec::new();
    let n = d.crossing_count();
    let points = insertion_points(d);
    let fresh = d.fresh_ids(2);
    let heights: &[bool] = if d.is_flat() { &[true] } else { &[true, false] };
    let chiralities = [Chirality::Left, Chirality::Right];
    if n < budget.max_crossings {
        for at in &points {
            for &over_first in heights {
                for chirality in chiralities {
                    out.push(Move::R1Add { id: fresh[0].clone(), at: *at, over_first, chirality });
                }
            }
        }
    }
    if n + 2 <= budget.max_crossings {
        let dict = word_dictionary(d.surface(), budget.max_word_len);
        for a in &points {
            for b in &points {
                for u in &dict {
                    for &a_over in heights {
                        for chirality in chiralities {
                            for reverse in [false, true] {
                                out.push(Move::R2Add {
                                    x: fresh[0].clone(),
                                    y: fresh[1].clone(),
                                    a: *a,
                                    b: *b,
                                    u: u.clone(),
                                    a_over,
                                    chirality,
                                    reverse,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
