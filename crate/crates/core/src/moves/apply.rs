use super::r3::{adjacent, apply_r3, crosses, edge_word, Strand};
use super::splice::{rebuild, remove_passes, Item, Splice};
use super::{Applied, Move, Point};
use crate::diagram::{Chirality, Crossing, CrossingId, Pass, TangleDiagram};
use crate::error::{Error, Result};

fn check_point(d: &TangleDiagram, p: &Point) -> Result<()> {
    let ok = d.components().get(p.component).and_then(|c| c.words.get(p.word)).is_some_and(|w| p.split <= w.len());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSite(format!("no point {}:{}:{}", p.component + 1, p.word, p.split)))
    }
}

fn check_fresh(d: &TangleDiagram, ids: &[&CrossingId]) -> Result<()> {
    for id in ids {
        if d.crossings().contains_key(*id) {
            return Err(Error::InvalidSite(format!("crossing id {id} already in use")));
        }
    }
    if ids.len() == 2 && ids[0] == ids[1] {
        return Err(Error::InvalidSite("new crossings need distinct ids".into()));
    }
    Ok(())
}

/// Stored chirality for a crossing whose slot-1 pass belongs to the strand
/// that crosses with `how` if `mover_is_under`, else the flipped value.
fn slot_chirality(how: Chirality, mover_is_slot1: bool) -> Chirality {
    if mover_is_slot1 {
        how
    } else {
        how.flip()
    }
}

pub(crate) fn apply(d: &TangleDiagram, m: &Move) -> Result<Applied> {
    match m {
        Move::R1Add { id, at, over_first, chirality } => {
            check_point(d, at)?;
            check_fresh(d, &[id])?;
            let first_slot = if *over_first || d.is_flat() { 0 } else { 1 };
            let (surface, mut comps, mut crossings, flat) = d.parts();
            let items = vec![
                Item::Pass(Pass { crossing: id.clone(), slot: first_slot }),
                Item::Pass(Pass { crossing: id.clone(), slot: 1 - first_slot }),
            ];
            comps[at.component] =
                rebuild(&comps[at.component], vec![Splice { word: at.word, split: at.split, order: 0, items }]);
            // `chirality` is how the second pass crosses the first
            let stored = slot_chirality(*chirality, first_slot == 0);
            crossings.insert(id.clone(), Crossing { id: id.clone(), chirality: stored });
            let diagram = TangleDiagram::from_parts(surface, comps, crossings, flat)?;
            Ok(Applied { diagram, created: vec![id.clone()], removed: vec![], dual_pair: None })
        }
        Move::R1Remove { id } => {
            let [a, b] = d.locate(id)?;
            let bad = |why: &str| Error::InvalidSite(format!("R1 {id}: {why}"));
            let c = d.component(a.component);
            let (lo, hi) = (a.position.min(b.position), a.position.max(b.position));
            let same = a.component == b.component;
            let direct = same && hi == lo + 1 && d.surface().is_trivial(&c.words[hi])?;
            let mut cur = d.clone();
            if !direct {
                // on a closed walk the loop may run through the basepoint
                let wraps = same && c.is_closed() && lo == 0 && hi + 1 == c.passes.len();
                if !wraps {
                    return Err(bad("no trivial loop between the passes"));
                }
                cur = cur.rotate_basepoint(a.component)?;
                let [a2, b2] = cur.locate(id)?;
                let w = &cur.component(a2.component).words[a2.position.max(b2.position)];
                if !cur.surface().is_trivial(w)? {
                    return Err(bad("no trivial loop between the passes"));
                }
            }
            let [a, b] = cur.locate(id)?;
            let (surface, mut comps, mut crossings, flat) = cur.parts();
            comps[a.component] = remove_passes(&comps[a.component], &[a.position, b.position]);
            crossings.remove(id);
            let diagram = TangleDiagram::from_parts(surface, comps, crossings, flat)?;
            Ok(Applied { diagram, created: vec![], removed: vec![id.clone()], dual_pair: None })
        }
        Move::R2Add { x, y, a, b, u, a_over, chirality, reverse } => {
            check_point(d, a)?;
            check_point(d, b)?;
            check_fresh(d, &[x, y])?;
            d.surface().check_word(u)?;
            let a_slot = if *a_over || d.is_flat() { 0 } else { 1 };
            let (surface, mut comps, mut crossings, flat) = d.parts();
            let pass = |id: &CrossingId, slot: u8| Item::Pass(Pass { crossing: id.clone(), slot });
            let a_items = vec![Item::Word(u.clone()), pass(x, a_slot), pass(y, a_slot), Item::Word(u.inverse())];
            let b_items = if *reverse {
                vec![pass(y, 1 - a_slot), pass(x, 1 - a_slot)]
            } else {
                vec![pass(x, 1 - a_slot), pass(y, 1 - a_slot)]
            };
            let sa = Splice { word: a.word, split: a.split, order: 0, items: a_items };
            let sb = Splice { word: b.word, split: b.split, order: 1, items: b_items };
            if a.component == b.component {
                comps[a.component] = rebuild(&comps[a.component], vec![sa, sb]);
            } else {
                comps[a.component] = rebuild(&comps[a.component], vec![sa]);
                comps[b.component] = rebuild(&comps[b.component], vec![sb]);
            }
            // `chirality` is how A crosses B at x; the returning strand crosses the other way at y
            let at_x = slot_chirality(*chirality, a_slot == 1);
            crossings.insert(x.clone(), Crossing { id: x.clone(), chirality: at_x });
            crossings.insert(y.clone(), Crossing { id: y.clone(), chirality: at_x.flip() });
            let diagram = TangleDiagram::from_parts(surface, comps, crossings, flat)?;
            Ok(Applied {
                diagram,
                created: vec![x.clone(), y.clone()],
                removed: vec![],
                dual_pair: Some((x.clone(), y.clone())),
            })
        }
        Move::R2Remove { x, y } => {
            let diagram = remove_bigon(d, x, y)?;
            Ok(Applied {
                diagram,
                created: vec![],
                removed: vec![x.clone(), y.clone()],
                dual_pair: Some((x.clone(), y.clone())),
            })
        }
        Move::R3 { crossings } => {
            let diagram = apply_r3(d, crossings)?;
            Ok(Applied { diagram, created: vec![], removed: vec![], dual_pair: None })
        }
    }
}

/// The two strands of a bigon between `x` and `y` under one of the two
/// ways of pairing their passes, if both pairs are adjacent.
pub(crate) fn bigon_strands(
    d: &TangleDiagram,
    x: &CrossingId,
    y: &CrossingId,
    pairing: usize,
) -> Result<Option<(Strand, Strand)>> {
    if x == y {
        return Ok(None);
    }
    let [x0, x1] = d.locate(x)?;
    let [y0, y1] = d.locate(y)?;
    let ((p0, p1), (q0, q1)) = if pairing == 0 { ((x0, y0), (x1, y1)) } else { ((x0, y1), (x1, y0)) };
    Ok(adjacent(d, p0, p1).zip(adjacent(d, q0, q1)))
}

/// Checks the removal conditions on non-wrapping strands.
pub(crate) fn bigon_removable(d: &TangleDiagram, x: &CrossingId, p: &Strand, q: &Strand) -> Result<bool> {
    let y_on = |s: &Strand| if d.pass(s.first).crossing == *x { (s.first, s.second) } else { (s.second, s.first) };
    let (px, py) = y_on(p);
    let (qx, _) = y_on(q);
    let y = &d.pass(py).crossing;
    if !d.is_flat() && d.pass(px).slot != d.pass(py).slot {
        return Ok(false);
    }
    if crosses(d, x, px)? == crosses(d, y, py)? {
        return Ok(false);
    }
    let (wp, wq) = (edge_word(d, p), edge_word(d, q));
    let p_from_x = p.first == px;
    let q_from_x = q.first == qx;
    let wp = if p_from_x { wp } else { wp.inverse() };
    let wq = if q_from_x { wq } else { wq.inverse() };
    d.surface().is_trivial(&wp.mul(&wq.inverse()))
}

fn remove_bigon(d: &TangleDiagram, x: &CrossingId, y: &CrossingId) -> Result<TangleDiagram> {
    let invalid = |why: &str| Error::InvalidSite(format!("R2 {x} {y}: {why}"));
    // a strand through a basepoint is cleared by rotating that walk; rotation
    // can swap flat slots, so both pairings are retried on every candidate
    let mut comps = std::collections::BTreeSet::new();
    for id in [x, y] {
        comps.extend(d.locate(id)?.iter().map(|p| p.component));
    }
    let mut candidates = vec![d.clone()];
    for c in comps.into_iter().filter(|&c| d.component(c).is_closed()) {
        let once = d.rotate_basepoint(c)?;
        candidates.push(once.rotate_basepoint(c)?);
        candidates.push(once);
    }
    let mut found_bigon = false;
    for (cur, pairing) in candidates.into_iter().flat_map(|c| [(c.clone(), 0), (c, 1)]) {
        let Some((p, q)) = bigon_strands(&cur, x, y, pairing)? else { continue };
        if p.wraps || q.wraps {
            continue;
        }
        found_bigon = true;
        if !bigon_removable(&cur, x, &p, &q)? {
            continue;
        }
        let (surface, mut comps, mut crossings, flat) = cur.parts();
        if p.first.component == q.first.component {
            let c = p.first.component;
            comps[c] =
                remove_passes(&comps[c], &[p.first.position, p.second.position, q.first.position, q.second.position]);
        } else {
            comps[p.first.component] = remove_passes(&comps[p.first.component], &[p.first.position, p.second.position]);
            comps[q.first.component] = remove_passes(&comps[q.first.component], &[q.first.position, q.second.position]);
        }
        crossings.remove(x);
        crossings.remove(y);
        return TangleDiagram::from_parts(surface, comps, crossings, flat);
    }
    Err(if found_bigon {
        invalid("roles, chirality or bigon word do not allow removal")
    } else {
        invalid("not a bigon")
    })
}
