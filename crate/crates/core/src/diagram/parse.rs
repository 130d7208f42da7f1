//! The `.tdg` text format.
//!
//! ```text
//! # comment
//! surface genus=0 boundary=2
//! component K closed
//! walk: t x1:over:L t x1:under 1
//! sign x1 +
//! ```
//!
//! Roles are `over`/`under` on classical diagrams and `first`/`second` on
//! flat ones (a bare `flat` line marks a flat diagram without crossings).
//! The optional `:L`/`:R` suffix gives the chirality: how the strand visited
//! second crosses the strand visited first. Classical crossings need a sign
//! line, a chirality suffix, or both (which must then agree). Words between
//! passes may be omitted; `1` and `""` denote the identity.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::model::{Chirality, Component, ComponentKind, Crossing, CrossingId, Pass, TangleDiagram};
use crate::error::{Error, Result, Violation, ViolationKind};
use crate::group::{SurfacePresentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Over,
    Under,
    First,
    Second,
}

struct PassToken {
    id: CrossingId,
    role: Role,
    chirality: Option<Chirality>,
    line: usize,
    component: usize,
    position: usize,
}

#[derive(Default)]
struct Collector(Vec<Violation>);

impl Collector {
    fn push(&mut self, line: usize, kind: ViolationKind, message: impl Into<String>) {
        self.0.push(Violation { line: Some(line), kind, message: message.into() });
    }
}

fn parse_surface(line: &str, n: usize, out: &mut Collector) -> Option<SurfacePresentation> {
    let mut genus = None;
    let mut boundary = None;
    let mut generators: Option<Vec<u8>> = None;
    let mut relator = None;
    let mut bound = None;
    for tok in line.split_whitespace().skip(1) {
        let Some((k, v)) = tok.split_once('=') else {
            out.push(n, ViolationKind::Syntax, format!("expected key=value, got '{tok}'"));
            return None;
        };
        let bad = |out: &mut Collector| out.push(n, ViolationKind::Syntax, format!("bad value in '{tok}'"));
        match k {
            "genus" => genus = v.parse::<u32>().map_err(|_| bad(out)).ok(),
            "boundary" => boundary = v.parse::<u32>().map_err(|_| bad(out)).ok(),
            "bound" => bound = v.parse::<u32>().map_err(|_| bad(out)).ok(),
            "generators" => generators = Some(v.bytes().collect()),
            "relator" => relator = Word::parse(v).map_err(|_| bad(out)).ok(),
            _ => out.push(n, ViolationKind::Syntax, format!("unknown surface key '{k}'")),
        }
    }
    let (Some(g), Some(b)) = (genus, boundary) else {
        out.push(n, ViolationKind::Syntax, "surface line needs genus= and boundary=");
        return None;
    };
    let mut s = match SurfacePresentation::new(g, b) {
        Ok(s) => s,
        Err(e) => {
            out.push(n, ViolationKind::Syntax, e.to_string());
            return None;
        }
    };
    if generators.is_some() || relator.is_some() {
        let gens = generators.unwrap_or_else(|| s.generators().to_vec());
        s = match s.with_alphabet(gens, relator) {
            Ok(s) => s,
            Err(e) => {
                out.push(n, ViolationKind::Syntax, e.to_string());
                return None;
            }
        };
    }
    if let Some(bound) = bound {
        s = s.with_search_bound(bound);
    }
    Some(s)
}

/// Splits on whitespace, keeping double-quoted strings (possibly empty) whole.
fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut started = false;
    for c in text.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                cur.push(c);
                started = true;
            }
            c if c.is_whitespace() && !quoted => {
                if started {
                    out.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    if started {
        out.push(cur);
    }
    out
}

fn parse_pass(tok: &str, n: usize, out: &mut Collector) -> Option<(CrossingId, Role, Option<Chirality>)> {
    let parts: Vec<&str> = tok.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 || parts[0].is_empty() {
        out.push(n, ViolationKind::Syntax, format!("bad pass '{tok}'"));
        return None;
    }
    let role = match parts[1] {
        "over" => Role::Over,
        "under" => Role::Under,
        "first" => Role::First,
        "second" => Role::Second,
        r => {
            out.push(n, ViolationKind::Syntax, format!("unknown role '{r}'"));
            return None;
        }
    };
    let chirality = match parts.get(2) {
        None => None,
        Some(&"L") => Some(Chirality::Left),
        Some(&"R") => Some(Chirality::Right),
        Some(c) => {
            out.push(n, ViolationKind::Syntax, format!("unknown chirality '{c}'"));
            return None;
        }
    };
    Some((CrossingId::new(parts[0]), role, chirality))
}

pub fn parse_diagram(text: &str) -> Result<TangleDiagram> {
    let mut out = Collector::default();
    let mut surface = None;
    let mut flat_marker = false;
    let mut components: Vec<Component> = Vec::new();
    let mut passes: Vec<PassToken> = Vec::new();
    let mut signs: BTreeMap<CrossingId, (i8, usize)> = BTreeMap::new();
    let mut word_lines: Vec<(usize, usize, Word)> = Vec::new();
    // whether the last walk item of the current component was a word
    let mut last_was_word = false;

    for (idx, raw) in text.lines().enumerate() {
        let n = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let head = line.split_whitespace().next().unwrap_or("");
        if surface.is_none() && head != "surface" {
            out.push(n, ViolationKind::Syntax, "the first line must be a surface line");
            break;
        }
        match head {
            "surface" if surface.is_none() => match parse_surface(line, n, &mut out) {
                Some(s) => surface = Some(s),
                None => break,
            },
            "flat" if line == "flat" => flat_marker = true,
            "component" => {
                let toks: Vec<&str> = line.split_whitespace().collect();
                let kind = match toks.get(2) {
                    Some(&"closed") => Some(ComponentKind::Closed),
                    Some(&"long") => Some(ComponentKind::Long),
                    _ => None,
                };
                match (toks.len(), kind) {
                    (3, Some(kind)) => {
                        let mut c = Component::new(toks[1], kind);
                        c.words.clear();
                        components.push(c);
                        last_was_word = false;
                    }
                    _ => out.push(n, ViolationKind::Syntax, "expected 'component <name> <closed|long>'"),
                }
            }
            _ if line.starts_with("walk:") => {
                let Some(ci) = components.len().checked_sub(1) else {
                    out.push(n, ViolationKind::Syntax, "walk before any component");
                    continue;
                };
                for tok in tokenize(&line["walk:".len()..]) {
                    if tok.contains(':') && !tok.starts_with('"') {
                        let Some((id, role, chirality)) = parse_pass(&tok, n, &mut out) else { continue };
                        let comp = &mut components[ci];
                        if !last_was_word {
                            comp.words.push(Word::identity());
                        }
                        let position = comp.passes.len();
                        comp.passes.push(Pass { crossing: id.clone(), slot: 0 });
                        passes.push(PassToken { id, role, chirality, line: n, component: ci, position });
                        last_was_word = false;
                    } else {
                        let w = match Word::parse(&tok) {
                            Ok(w) => w,
                            Err(_) => {
                                out.push(n, ViolationKind::Syntax, format!("bad word '{tok}'"));
                                continue;
                            }
                        };
                        word_lines.push((n, ci, w.clone()));
                        let comp = &mut components[ci];
                        if last_was_word {
                            let last = comp.words.last_mut().expect("word present");
                            *last = last.mul(&w);
                        } else {
                            comp.words.push(w);
                        }
                        last_was_word = true;
                    }
                }
            }
            "sign" => {
                let toks: Vec<&str> = line.split_whitespace().collect();
                let s = match toks.get(2) {
                    Some(&"+") | Some(&"+1") => Some(1),
                    Some(&"-") | Some(&"-1") => Some(-1),
                    _ => None,
                };
                match (toks.len(), s) {
                    (3, Some(s)) => {
                        if signs.insert(CrossingId::new(toks[1]), (s, n)).is_some() {
                            out.push(n, ViolationKind::Syntax, format!("second sign line for {}", toks[1]));
                        }
                    }
                    _ => out.push(n, ViolationKind::Syntax, "expected 'sign <id> <+|->'"),
                }
            }
            _ => out.push(n, ViolationKind::Syntax, format!("unrecognized line '{line}'")),
        }
    }
    let Some(surface) = surface else {
        if out.0.is_empty() {
            out.push(1, ViolationKind::Syntax, "missing surface line");
        }
        return Err(Error::Invalid(out.0));
    };
    for c in &mut components {
        if c.words.len() == c.passes.len() {
            c.words.push(Word::identity());
        }
    }
    for (n, _, w) in &word_lines {
        if let Err(e) = surface.check_word(w) {
            out.push(*n, ViolationKind::AlphabetMismatch, e.to_string());
        }
    }
    if components.is_empty() {
        out.push(text.lines().count().max(1), ViolationKind::Structure, "diagram has no components");
    }

    let flat_roles = passes.iter().filter(|p| matches!(p.role, Role::First | Role::Second)).count();
    if flat_roles != 0 && flat_roles != passes.len() {
        let n = passes.iter().find(|p| matches!(p.role, Role::First | Role::Second)).map_or(1, |p| p.line);
        out.push(n, ViolationKind::Syntax, "flat and classical roles mixed");
    }
    let flat = flat_marker || flat_roles > 0;
    if flat {
        if let Some((id, (_, n))) = signs.iter().next() {
            out.push(*n, ViolationKind::InconsistentSign, format!("flat crossing {id} carries a sign"));
        }
    }

    let mut by_id: BTreeMap<CrossingId, Vec<&PassToken>> = BTreeMap::new();
    for p in &passes {
        by_id.entry(p.id.clone()).or_default().push(p);
    }
    let mut crossings = BTreeMap::new();
    for (id, ps) in &by_id {
        if ps.len() != 2 {
            out.push(ps[0].line, ViolationKind::WrongVisitCount, format!("crossing {id} visited {} time(s)", ps.len()));
            continue;
        }
        // tokens are in walk order, so ps[0] is visited first
        let (a, b) = (ps[0], ps[1]);
        let slot_a = match (a.role, b.role) {
            (Role::Over, Role::Under) | (Role::First, Role::Second) => 0,
            (Role::Under, Role::Over) | (Role::Second, Role::First) => 1,
            _ => {
                out.push(b.line, ViolationKind::WrongVisitCount, format!("crossing {id} needs two distinct roles"));
                continue;
            }
        };
        components[a.component].passes[a.position].slot = slot_a;
        components[b.component].passes[b.position].slot = 1 - slot_a;
        let visit = match (a.chirality, b.chirality) {
            (Some(x), Some(y)) if x != y => {
                out.push(b.line, ViolationKind::InconsistentSign, format!("conflicting chirality at {id}"));
                continue;
            }
            (x, y) => x.or(y),
        };
        // stored chirality is relative to slots: how slot 1 crosses slot 0
        let from_visit = visit.map(|c| if slot_a == 0 { c } else { c.flip() });
        let from_sign = if flat {
            None
        } else {
            signs.get(id).map(|(s, _)| if *s > 0 { Chirality::Left } else { Chirality::Right })
        };
        let chirality = match (from_visit, from_sign) {
            (Some(x), Some(y)) if x != y => {
                out.push(
                    signs[id].1,
                    ViolationKind::InconsistentSign,
                    format!("sign of {id} contradicts its chirality"),
                );
                continue;
            }
            (Some(x), _) | (None, Some(x)) => x,
            (None, None) => {
                out.push(a.line, ViolationKind::Structure, format!("crossing {id} has neither chirality nor sign"));
                continue;
            }
        };
        crossings.insert(id.clone(), Crossing { id: id.clone(), chirality });
    }
    for (id, (_, n)) in &signs {
        if !by_id.contains_key(id) {
            out.push(*n, ViolationKind::WrongVisitCount, format!("sign for unknown crossing {id}"));
        }
    }
    if !out.0.is_empty() {
        out.0.sort_by_key(|v| v.line);
        return Err(Error::Invalid(out.0));
    }
    TangleDiagram::from_parts(surface, components, crossings, flat)
}

pub fn serialize(d: &TangleDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", d.surface());
    let sb = d.surface().search_bound();
    if sb != crate::group::DEFAULT_SEARCH_BOUND {
        s.pop();
        let _ = writeln!(s, " bound={sb}");
    }
    if d.is_flat() {
        s.push_str("flat\n");
    }
    for (ci, c) in d.components().iter().enumerate() {
        let kind = if c.is_closed() { "closed" } else { "long" };
        let _ = writeln!(s, "component {} {kind}", c.name);
        s.push_str("walk:");
        for (k, w) in c.words.iter().enumerate() {
            let _ = write!(s, " {w}");
            if let Some(p) = c.passes.get(k) {
                let role = match (d.is_flat(), p.slot) {
                    (false, 0) => "over",
                    (false, _) => "under",
                    (true, 0) => "first",
                    (true, _) => "second",
                };
                let _ = write!(s, " {}:{role}", p.crossing);
                let [s0, s1] = d.locate(&p.crossing).expect("walk crossing");
                let here = super::model::PassRef { component: ci, position: k };
                if here == s0.min(s1) {
                    let c = d.visit_chirality(&p.crossing).expect("walk crossing");
                    let _ = write!(s, ":{}", c.letter());
                }
            }
        }
        s.push('\n');
    }
    if !d.is_flat() {
        for id in d.crossings_in_walk_order() {
            let sign = if d.crossing_sign(&id).expect("classical") > 0 { '+' } else { '-' };
            let _ = writeln!(s, "sign {id} {sign}");
        }
    }
    s
}

impl std::str::FromStr for TangleDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}

impl std::fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize(self))
    }
}
