use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{insertion_points, word_dictionary};
use super::{apply_move, enumerate_moves, Move, MoveBudget, MoveTrace, Point};
use crate::diagram::{Chirality, CrossingId, PassRef, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::Word;

/// Pulls a small tongue from `at` along `u`, back across the walk just
/// after `at`. The two new crossings form a dual pair.
pub fn pull_sprout(d: &TangleDiagram, at: Point, u: &Word) -> Result<(TangleDiagram, MoveTrace)> {
    let ids = d.fresh_ids(2);
    let m = Move::R2Add {
        x: ids[0].clone(),
        y: ids[1].clone(),
        a: at,
        b: at,
        u: u.clone(),
        a_over: true,
        chirality: Chirality::Left,
        reverse: false,
    };
    let applied = apply_move(d, &m)?;
    let mut trace = MoveTrace::default();
    trace.push(m, &applied);
    Ok((applied.diagram, trace))
}

/// Number of steps forward along the walk from `from` to a pass of `target`.
fn distance_to(d: &TangleDiagram, from: PassRef, target: &CrossingId) -> Option<usize> {
    let c = d.component(from.component);
    let m = c.passes.len();
    let limit = if c.is_closed() { m } else { m - from.position };
    (1..limit).find(|&k| c.passes[(from.position + k) % m].crossing == *target)
}

/// The pass of `id` with the given slot.
fn pass_with_slot(d: &TangleDiagram, id: &CrossingId, slot: u8) -> Result<PassRef> {
    let locs = d.locate(id)?;
    Ok(*locs.iter().find(|p| d.pass(**p).slot == slot).expect("one pass per slot"))
}

/// Points just before and just after a pass.
fn points_around(d: &TangleDiagram, p: PassRef) -> [Point; 2] {
    let before = d.component(p.component).words[p.position].len();
    [
        Point { component: p.component, word: p.position, split: before },
        Point { component: p.component, word: p.position + 1, split: 0 },
    ]
}

/// Pulls crossing `b` forward along one of its strands until the next
/// crossing met is `a`. Each step fingers the other strand at `b` across
/// the next crossing with a second move and slides `b` past it with a
/// third move.
pub fn pull_crossing(d: &TangleDiagram, b: &CrossingId, a: &CrossingId) -> Result<(TangleDiagram, MoveTrace)> {
    d.locate(a)?;
    let not_on = || Error::PathNotOnDiagram(format!("no walk from {b} to {a}"));
    // move along the strand that reaches `a` soonest
    let slot = [0u8, 1]
        .into_iter()
        .filter_map(|s| {
            let p = pass_with_slot(d, b, s).ok()?;
            distance_to(d, p, a).map(|k| (k, s))
        })
        .min()
        .map(|(_, s)| s)
        .ok_or_else(not_on)?;
    let mut cur = d.clone();
    let mut trace = MoveTrace::default();
    let limit = 4 * d.crossing_count() + 4;
    for _ in 0..limit {
        let mut s_pass = pass_with_slot(&cur, b, slot)?;
        match distance_to(&cur, s_pass, a) {
            Some(1) => return Ok((cur, trace)),
            Some(_) => {}
            None => return Err(not_on()),
        }
        let comp = cur.component(s_pass.component);
        if comp.is_closed() && s_pass.position + 1 == comp.passes.len() {
            cur = cur.rotate_basepoint(s_pass.component)?;
            s_pass = pass_with_slot(&cur, b, slot)?;
        }
        let (next, steps) = slide_past_next(&cur, b, s_pass)?;
        for (m, applied) in steps {
            trace.push(m, &applied);
        }
        cur = next;
    }
    Err(Error::InvalidSite(format!("pulling {b} to {a} did not terminate")))
}

type Step = (Move, super::Applied);

/// One finger-and-slide step moving `b` past the next crossing along `s_pass`.
fn slide_past_next(d: &TangleDiagram, b: &CrossingId, s_pass: PassRef) -> Result<(TangleDiagram, Vec<Step>)> {
    let comp = d.component(s_pass.component);
    let e_pass = PassRef { component: s_pass.component, position: s_pass.position + 1 };
    let e = comp.passes[e_pass.position].crossing.clone();
    if e == *b {
        return Err(Error::InvalidSite(format!("{b} is a kink; nothing to pull past")));
    }
    let [b0, b1] = d.locate(b)?;
    let t_pass = if b0 == s_pass { b1 } else { b0 };
    let [e0, e1] = d.locate(&e)?;
    let e_other = if e0 == e_pass { e1 } else { e0 };
    let u = comp.words[e_pass.position].clone();
    let ids = d.fresh_ids(2);
    let heights: &[bool] = if d.is_flat() { &[true] } else { &[true, false] };
    for t_point in points_around(d, t_pass) {
        for e_point in points_around(d, e_other) {
            for &a_over in heights {
                for chirality in [Chirality::Left, Chirality::Right] {
                    for reverse in [false, true] {
                        let m2 = Move::R2Add {
                            x: ids[0].clone(),
                            y: ids[1].clone(),
                            a: t_point,
                            b: e_point,
                            u: u.clone(),
                            a_over,
                            chirality,
                            reverse,
                        };
                        let Ok(r2) = apply_move(d, &m2) else { continue };
                        for n in &ids {
                            let m3 = Move::R3 { crossings: [b.clone(), e.clone(), n.clone()] };
                            let Ok(r3) = apply_move(&r2.diagram, &m3) else { continue };
                            if passed(&r3.diagram, b, &e, s_pass.component) {
                                return Ok((r3.diagram.clone(), vec![(m2, r2), (m3, r3)]));
                            }
                        }
                    }
                }
            }
        }
    }
    Err(Error::InvalidSite(format!("cannot slide {b} past {e}")))
}

/// `b` now comes right after `e` along some walk on component `ci`.
fn passed(d: &TangleDiagram, b: &CrossingId, e: &CrossingId, ci: usize) -> bool {
    let c = d.component(ci);
    let m = c.passes.len();
    (0..m).any(|k| c.passes[k].crossing == *e && (k + 1 < m || c.is_closed()) && c.passes[(k + 1) % m].crossing == *b)
}

/// Weights and bounds for [`random_walk`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkConfig {
    pub add_weight: u32,
    pub remove_weight: u32,
    pub r3_weight: u32,
    pub max_crossings: usize,
    pub max_word_len: usize,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig { add_weight: 2, remove_weight: 2, r3_weight: 3, max_crossings: 8, max_word_len: 2 }
    }
}

fn random_insertion(d: &TangleDiagram, rng: &mut ChaCha8Rng, cfg: &WalkConfig) -> Option<Move> {
    let n = d.crossing_count();
    let points = insertion_points(d);
    let ids = d.fresh_ids(2);
    let chirality = if rng.gen() { Chirality::Left } else { Chirality::Right };
    let over = d.is_flat() || rng.gen();
    let can_r1 = n < cfg.max_crossings;
    let can_r2 = n + 2 <= cfg.max_crossings;
    if can_r2 && (!can_r1 || rng.gen_bool(0.6)) {
        let dict = word_dictionary(d.surface(), cfg.max_word_len);
        Some(Move::R2Add {
            x: ids[0].clone(),
            y: ids[1].clone(),
            a: *points.choose(rng)?,
            b: *points.choose(rng)?,
            u: dict.choose(rng)?.clone(),
            a_over: over,
            chirality,
            reverse: rng.gen(),
        })
    } else if can_r1 {
        Some(Move::R1Add { id: ids[0].clone(), at: *points.choose(rng)?, over_first: over, chirality })
    } else {
        None
    }
}

/// A seeded random sequence of `steps` moves mixing insertions, removals
/// and third moves. The crossing count never exceeds the configured bound.
pub fn random_walk(d: &TangleDiagram, steps: usize, seed: u64, cfg: &WalkConfig) -> Result<(TangleDiagram, MoveTrace)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut trace = MoveTrace::default();
    let local = MoveBudget { max_crossings: cfg.max_crossings, max_word_len: cfg.max_word_len, insertions: false };
    for _ in 0..steps {
        let sites = enumerate_moves(&cur, &local);
        let (removals, r3s): (Vec<Move>, Vec<Move>) = sites.into_iter().partition(|m| m.is_removal());
        let insertion = random_insertion(&cur, &mut rng, cfg);
        let weights = [
            if insertion.is_some() { cfg.add_weight } else { 0 },
            if removals.is_empty() { 0 } else { cfg.remove_weight },
            if r3s.is_empty() { 0 } else { cfg.r3_weight },
        ];
        let total: u32 = weights.iter().sum();
        if total == 0 {
            break;
        }
        let mut pick = rng.gen_range(0..total);
        let kind = weights.iter().position(|&w| {
            if pick < w {
                true
            } else {
                pick -= w;
                false
            }
        });
        let m = match kind {
            Some(0) => insertion.expect("weighted only when present"),
            Some(1) => removals.choose(&mut rng).expect("nonempty").clone(),
            _ => r3s.choose(&mut rng).expect("nonempty").clone(),
        };
        let applied = apply_move(&cur, &m)?;
        trace.push(m, &applied);
        cur = applied.diagram;
    }
    Ok((cur, trace))
}
