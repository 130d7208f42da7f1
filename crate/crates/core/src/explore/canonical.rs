use std::collections::BTreeMap;
use std::fmt::Write;

use crate::diagram::{CrossingId, TangleDiagram};
use crate::group::Word;

/// A canonical key for a diagram up to basepoint rotation and crossing
/// names, with every labelling of crossings that attains it.
#[derive(Debug, Clone)]
pub(crate) struct CanonicalForm {
    pub key: String,
    /// Crossing id to canonical label, one map per minimizing choice.
    pub labelings: Vec<BTreeMap<CrossingId, usize>>,
}

struct Partial {
    text: String,
    labels: BTreeMap<CrossingId, usize>,
}

fn normalized(d: &TangleDiagram, w: &Word) -> String {
    d.surface().normal_form(w).unwrap_or_else(|_| d.surface().dehn_reduce(w)).to_string()
}

/// Walk of component `ci` as (pass index, following word) pairs starting at
/// pass `start`. On a closed walk the last word absorbs the first.
fn walk_text(d: &TangleDiagram, ci: usize, start: usize, labels: &mut BTreeMap<CrossingId, usize>) -> String {
    let c = d.component(ci);
    let m = c.passes.len();
    let mut out = String::new();
    if c.is_closed() {
        out.push('C');
        if m == 0 {
            let _ = write!(out, " {}", normalized(d, &c.words[0]));
        }
    } else {
        let _ = write!(out, "L {}", normalized(d, &c.words[0]));
    }
    for i in 0..m {
        let k = (start + i) % m;
        let pass = &c.passes[k];
        let next = labels.len();
        let first_time = !labels.contains_key(&pass.crossing);
        let label = *labels.entry(pass.crossing.clone()).or_insert(next);
        let _ = write!(out, " {label}");
        if first_time {
            let chir = d.crossing(&pass.crossing).expect("pass names a crossing").chirality;
            if d.is_flat() {
                // how the other pass crosses this one
                let how = if pass.slot == 0 { chir } else { chir.flip() };
                let _ = write!(out, "{}", how.letter());
            } else {
                let _ = write!(out, "{}{}", if pass.slot == 0 { 'o' } else { 'u' }, chir.letter());
            }
        }
        let word = if c.is_closed() && k == m - 1 { c.words[m].mul(&c.words[0]) } else { c.words[k + 1].clone() };
        let _ = write!(out, " {}", normalized(d, &word));
    }
    out
}

/// Canonical form: closed walks are rotated to the least text, components
/// taken in order, and crossings labelled by first occurrence.
pub(crate) fn canonical_form(d: &TangleDiagram) -> CanonicalForm {
    let mut partials = vec![Partial { text: String::new(), labels: BTreeMap::new() }];
    for ci in 0..d.components().len() {
        let c = d.component(ci);
        let starts: Vec<usize> =
            if c.is_closed() && !c.passes.is_empty() { (0..c.passes.len()).collect() } else { vec![0] };
        let mut next: Vec<Partial> = Vec::new();
        let mut best: Option<String> = None;
        for p in &partials {
            for &s in &starts {
                let mut labels = p.labels.clone();
                let piece = walk_text(d, ci, s, &mut labels);
                let text = format!("{}|{}", p.text, piece);
                match best.as_ref().map(|b| text.cmp(b)) {
                    Some(std::cmp::Ordering::Greater) => continue,
                    Some(std::cmp::Ordering::Less) | None => {
                        best = Some(text.clone());
                        next.clear();
                    }
                    Some(std::cmp::Ordering::Equal) => {}
                }
                next.push(Partial { text, labels });
            }
        }
        partials = next;
    }
    let key = partials[0].text.clone();
    let mut labelings: Vec<BTreeMap<CrossingId, usize>> = partials.into_iter().map(|p| p.labels).collect();
    labelings.dedup();
    CanonicalForm { key, labelings }
}
