use std::collections::{BTreeMap, HashSet};

use super::canonical::canonical_form;
use crate::diagram::{Chirality, Component, ComponentKind, Crossing, CrossingId, Pass, TangleDiagram};
use crate::group::{SurfacePresentation, Word};

/// Gauss sequences on `n` labels, each used twice, labels first used in order.
fn gauss_sequences(n: usize) -> Vec<Vec<usize>> {
    fn go(seq: &mut Vec<usize>, used: &mut [u8], n: usize, out: &mut Vec<Vec<usize>>) {
        if seq.len() == 2 * n {
            out.push(seq.clone());
            return;
        }
        let fresh = used.iter().position(|&u| u == 0);
        for l in 0..n {
            let ok = match used[l] {
                0 => Some(l) == fresh,
                1 => true,
                _ => false,
            };
            if ok {
                used[l] += 1;
                seq.push(l);
                go(seq, used, n, out);
                seq.pop();
                used[l] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![0; n], n, &mut out);
    out
}

/// Darts are (pass index, outgoing). The rotation at each crossing lists
/// its darts counterclockwise; the face count comes from orbits of
/// rotation after edge reversal.
fn is_planar(walks: &[Vec<usize>], chir: &[Chirality]) -> bool {
    let passes: Vec<(usize, usize)> =
        walks.iter().enumerate().flat_map(|(c, w)| (0..w.len()).map(move |k| (c, k))).collect();
    let total = passes.len();
    if total == 0 {
        return true;
    }
    let index = |c: usize, k: usize| passes.iter().position(|&p| p == (c, k)).expect("pass");
    let label = |p: usize| walks[passes[p].0][passes[p].1];
    let next_pass = |p: usize| {
        let (c, k) = passes[p];
        index(c, (k + 1) % walks[c].len())
    };
    let prev_pass = |p: usize| {
        let (c, k) = passes[p];
        index(c, (k + walks[c].len() - 1) % walks[c].len())
    };
    // dart id: 2 * pass + (1 if outgoing)
    let dart = |p: usize, out: bool| 2 * p + usize::from(out);
    let mut rot = vec![0usize; 2 * total];
    let mut seen_label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for p in 0..total {
        match seen_label.get(&label(p)) {
            Some(&first) => pairs.push((first, p)),
            None => {
                seen_label.insert(label(p), p);
            }
        }
    }
    for &(p1, p2) in &pairs {
        let order = match chir[label(p1)] {
            Chirality::Left => [dart(p1, true), dart(p2, true), dart(p1, false), dart(p2, false)],
            Chirality::Right => [dart(p1, true), dart(p2, false), dart(p1, false), dart(p2, true)],
        };
        for i in 0..4 {
            rot[order[i]] = order[(i + 1) % 4];
        }
    }
    // edge reversal: outgoing dart of p meets the incoming dart of the next pass
    let alpha = |d: usize| {
        let p = d / 2;
        if d % 2 == 1 {
            dart(next_pass(p), false)
        } else {
            dart(prev_pass(p), true)
        }
    };
    let mut visited = vec![false; 2 * total];
    let mut faces = 0;
    for start in 0..2 * total {
        if visited[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !visited[d] {
            visited[d] = true;
            d = rot[alpha(d)];
        }
    }
    // connected pieces of the projection, each must be a sphere
    let mut piece: Vec<usize> = (0..walks.len()).collect();
    fn root(piece: &mut [usize], x: usize) -> usize {
        if piece[x] == x {
            x
        } else {
            let r = root(piece, piece[x]);
            piece[x] = r;
            r
        }
    }
    for &(p1, p2) in &pairs {
        let (a, b) = (root(&mut piece, passes[p1].0), root(&mut piece, passes[p2].0));
        piece[a] = b;
    }
    let pieces =
        (0..walks.len()).filter(|&c| !walks[c].is_empty()).map(|c| root(&mut piece, c)).collect::<HashSet<_>>().len();
    let (v, e) = (pairs.len() as i64, total as i64);
    v - e + faces as i64 == 2 * pieces as i64
}

/// All flat diagrams on the sphere with one closed component, or two when
/// `links` is set, and at most `max_crossings` crossings, up to rotation
/// and renaming.
pub fn flat_sphere_diagrams(max_crossings: usize, links: bool) -> Vec<TangleDiagram> {
    let mut out = Vec::new();
    let mut keys = HashSet::new();
    let splits: Vec<usize> = if links { (0..=2 * max_crossings).collect() } else { vec![usize::MAX] };
    for n in 0..=max_crossings {
        for seq in gauss_sequences(n) {
            for &cut in &splits {
                let walks: Vec<Vec<usize>> = if cut == usize::MAX {
                    vec![seq.clone()]
                } else if cut <= seq.len() {
                    vec![seq[..cut].to_vec(), seq[cut..].to_vec()]
                } else {
                    continue;
                };
                for mask in 0..1u32 << n {
                    let chir: Vec<Chirality> =
                        (0..n).map(|i| if mask >> i & 1 == 0 { Chirality::Left } else { Chirality::Right }).collect();
                    if !is_planar(&walks, &chir) {
                        continue;
                    }
                    let d = build(&walks, &chir);
                    if keys.insert(canonical_form(&d).key) {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

fn build(walks: &[Vec<usize>], chir: &[Chirality]) -> TangleDiagram {
    let name = |l: usize| CrossingId::new(format!("c{}", l + 1));
    let mut seen = HashSet::new();
    let components = walks
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let passes: Vec<Pass> =
                w.iter().map(|&l| Pass { crossing: name(l), slot: if seen.insert(l) { 0 } else { 1 } }).collect();
            Component {
                name: format!("K{}", i + 1),
                kind: ComponentKind::Closed,
                words: vec![Word::identity(); passes.len() + 1],
                passes,
            }
        })
        .collect();
    let crossings = chir.iter().enumerate().map(|(l, &c)| (name(l), Crossing { id: name(l), chirality: c })).collect();
    TangleDiagram::from_parts(SurfacePresentation::sphere(), components, crossings, true).expect("well-formed walk")
}
