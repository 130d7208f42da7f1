//! Third Reidemeister move on a triangle of three strands.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::diagram::{Chirality, CrossingId, PassRef, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::Word;

/// Two passes adjacent along a walk, in walk order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Strand {
    pub first: PassRef,
    pub second: PassRef,
    /// The pair straddles the basepoint of a closed component.
    pub wraps: bool,
}

/// `a` and `b` adjacent along their walk, returned in walk order.
pub(crate) fn adjacent(d: &TangleDiagram, a: PassRef, b: PassRef) -> Option<Strand> {
    if a.component != b.component {
        return None;
    }
    let c = d.component(a.component);
    let m = c.passes.len();
    let (lo, hi) = if a.position < b.position { (a, b) } else { (b, a) };
    if hi.position == lo.position + 1 {
        return Some(Strand { first: lo, second: hi, wraps: false });
    }
    if c.is_closed() && m >= 2 && lo.position == 0 && hi.position == m - 1 {
        return Some(Strand { first: hi, second: lo, wraps: true });
    }
    None
}

/// Word of the segment between the two passes of a non-wrapping strand.
pub(crate) fn edge_word(d: &TangleDiagram, s: &Strand) -> Word {
    d.component(s.first.component).words[s.second.position].clone()
}

/// How the strand through `mine` crosses the other strand at the same crossing.
pub(crate) fn crosses(d: &TangleDiagram, id: &CrossingId, mine: PassRef) -> Result<Chirality> {
    let c = d.crossing(id)?.chirality;
    Ok(if d.pass(mine).slot == 1 { c } else { c.flip() })
}

/// Signature of a triangle: for each strand, the index of the strand met
/// first along it; for each pair `i < j`, how strand `j` crosses strand `i`.
type Signature = ([usize; 3], [Chirality; 3]);

fn pair_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        _ => 2,
    }
}

/// Signatures of every oriented, labelled arrangement of three lines in
/// general position in the plane (both mirror images).
fn geometric_signatures() -> &'static BTreeSet<Signature> {
    static SET: OnceLock<BTreeSet<Signature>> = OnceLock::new();
    SET.get_or_init(|| {
        let base = [((0.0, 0.0), 0.0f64), ((1.0, 0.2), 1.1), ((0.3, 1.0), 2.3)];
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = BTreeSet::new();
        for mirror in [1.0, -1.0] {
            for flips in 0..8u8 {
                for perm in perms {
                    let line = |s: usize| {
                        let ((px, py), ang): ((f64, f64), f64) = base[perm[s]];
                        let sgn = if flips >> s & 1 == 1 { -1.0 } else { 1.0 };
                        ((mirror * px, py), (mirror * sgn * ang.cos(), sgn * ang.sin()))
                    };
                    // parameter along line s of its meeting point with line t
                    let meet = |s: usize, t: usize| {
                        let ((px, py), (dx, dy)) = line(s);
                        let ((qx, qy), (ex, ey)) = line(t);
                        let den = dx * ey - dy * ex;
                        ((qx - px) * ey - (qy - py) * ex) / den
                    };
                    let mut first = [0usize; 3];
                    for (s, f) in first.iter_mut().enumerate() {
                        let others: Vec<usize> = (0..3).filter(|&t| t != s).collect();
                        *f = if meet(s, others[0]) < meet(s, others[1]) { others[0] } else { others[1] };
                    }
                    let mut chir = [Chirality::Left; 3];
                    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                        let (_, (dx, dy)) = line(i);
                        let (_, (ex, ey)) = line(j);
                        // j heads to the left of i: it crosses i from right to left
                        chir[pair_index(i, j)] =
                            if dx * ey - dy * ex > 0.0 { Chirality::Left } else { Chirality::Right };
                    }
                    out.insert((first, chir));
                }
            }
        }
        out
    })
}

/// A located triangle: strands in a fixed order, and for each pair of
/// strands the crossing they share.
pub(crate) struct Triangle {
    pub strands: [Strand; 3],
    pub crossing: [CrossingId; 3],
}

/// Finds the strand structure of a triangle, if the crossings form one.
pub(crate) fn find_triangle(d: &TangleDiagram, ids: &[CrossingId; 3]) -> Result<Option<Triangle>> {
    let mut passes: Vec<(PassRef, usize)> = Vec::new();
    for (k, id) in ids.iter().enumerate() {
        for p in d.locate(id)? {
            passes.push((p, k));
        }
    }
    if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
        return Ok(None);
    }
    // try every perfect matching of the six passes into three adjacent pairs
    let mut found = None;
    match_pairs(d, &passes, &mut vec![], &mut vec![false; 6], &mut found);
    let Some(pairs) = found else { return Ok(None) };
    let mut strands = [pairs[0].0, pairs[1].0, pairs[2].0];
    strands.sort_by_key(|s| s.first);
    let crossing_of = |s: &Strand, t: &Strand| -> Option<CrossingId> {
        let a = [d.pass(s.first).crossing.clone(), d.pass(s.second).crossing.clone()];
        let b = [d.pass(t.first).crossing.clone(), d.pass(t.second).crossing.clone()];
        a.into_iter().find(|x| b.contains(x))
    };
    let c01 = crossing_of(&strands[0], &strands[1]);
    let c02 = crossing_of(&strands[0], &strands[2]);
    let c12 = crossing_of(&strands[1], &strands[2]);
    match (c01, c02, c12) {
        (Some(a), Some(b), Some(c)) => Ok(Some(Triangle { strands, crossing: [a, b, c] })),
        _ => Ok(None),
    }
}

fn match_pairs(
    d: &TangleDiagram,
    passes: &[(PassRef, usize)],
    acc: &mut Vec<(Strand, [usize; 2])>,
    used: &mut Vec<bool>,
    found: &mut Option<Vec<(Strand, [usize; 2])>>,
) {
    if found.is_some() {
        return;
    }
    let Some(i) = used.iter().position(|u| !u) else {
        let mut keys: Vec<[usize; 2]> = acc.iter().map(|(_, k)| *k).collect();
        keys.iter_mut().for_each(|k| k.sort_unstable());
        keys.sort_unstable();
        if keys == [[0, 1], [0, 2], [1, 2]] {
            *found = Some(acc.clone());
        }
        return;
    };
    used[i] = true;
    for j in i + 1..passes.len() {
        if used[j] || passes[i].1 == passes[j].1 {
            continue;
        }
        if let Some(s) = adjacent(d, passes[i].0, passes[j].0) {
            used[j] = true;
            acc.push((s, [passes[i].1, passes[j].1]));
            match_pairs(d, passes, acc, used, found);
            acc.pop();
            used[j] = false;
        }
    }
    used[i] = false;
}

/// Applies the move. Strands straddling a basepoint are first rotated away.
pub(crate) fn apply_r3(d: &TangleDiagram, ids: &[CrossingId; 3]) -> Result<TangleDiagram> {
    let invalid = |why: &str| Error::InvalidSite(format!("R3 {} {} {}: {why}", ids[0], ids[1], ids[2]));
    let mut cur = d.clone();
    let mut tri = None;
    for _ in 0..=d.crossing_count() * 2 {
        let t = find_triangle(&cur, ids)?.ok_or_else(|| invalid("not a triangle"))?;
        match t.strands.iter().find(|s| s.wraps) {
            Some(s) => cur = cur.rotate_basepoint(s.first.component)?,
            None => {
                tri = Some(t);
                break;
            }
        }
    }
    let tri = tri.ok_or_else(|| invalid("strands cannot all avoid the basepoint"))?;
    let d = cur;
    if !d.is_flat() {
        let heights: Vec<(u8, u8)> =
            tri.strands.iter().map(|s| (d.pass(s.first).slot, d.pass(s.second).slot)).collect();
        if !heights.contains(&(0, 0)) || !heights.contains(&(1, 1)) {
            return Err(invalid("no consistent heights"));
        }
    }
    let mut first = [0usize; 3];
    for (s, strand) in tri.strands.iter().enumerate() {
        let c = &d.pass(strand.first).crossing;
        first[s] = (0..3).find(|&t| t != s && tri.crossing[pair_index(s, t)] == *c).expect("triangle crossing");
    }
    let mut chir = [Chirality::Left; 3];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let id = &tri.crossing[pair_index(i, j)];
        let s = &tri.strands[j];
        let mine = if d.pass(s.first).crossing == *id { s.first } else { s.second };
        chir[pair_index(i, j)] = crosses(&d, id, mine)?;
    }
    if !geometric_signatures().contains(&(first, chir)) {
        return Err(invalid("crossing pattern is not a triangle face"));
    }
    // gauge the three crossings so the triangle's edge words become trivial
    let mut gauge: [Option<Word>; 3] = [Some(Word::identity()), None, None];
    let index_of = |id: &CrossingId| tri.crossing.iter().position(|c| c == id).expect("triangle crossing");
    for _ in 0..3 {
        for s in &tri.strands {
            let f = index_of(&d.pass(s.first).crossing);
            let g = index_of(&d.pass(s.second).crossing);
            let e = edge_word(&d, s);
            match (&gauge[f], &gauge[g]) {
                (Some(gf), None) => gauge[g] = Some(e.inverse().mul(gf)),
                (None, Some(gg)) => gauge[f] = Some(e.mul(gg)),
                _ => {}
            }
        }
    }
    let mut out = d.clone();
    for (k, g) in gauge.iter().enumerate() {
        out = out.gauge(&tri.crossing[k], g.as_ref().expect("connected triangle"))?;
    }
    for s in &tri.strands {
        if !out.surface().is_trivial(&edge_word(&out, s))? {
            return Err(invalid("triangle does not bound a disk"));
        }
    }
    let (surface, mut comps, crossings, flat) = out.into_parts();
    for s in &tri.strands {
        comps[s.first.component].passes.swap(s.first.position, s.second.position);
    }
    TangleDiagram::from_parts(surface, comps, crossings, flat)
}
