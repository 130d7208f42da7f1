use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{apply_move, Applied, Move, Point};
use crate::diagram::{Chirality, CrossingId, TangleDiagram};
use crate::error::{Error, Result};
use crate::group::Word;

/// One applied move with its correspondence delta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub mv: Move,
    pub created: Vec<CrossingId>,
    pub removed: Vec<CrossingId>,
    pub dual_pair: Option<(CrossingId, CrossingId)>,
}

impl TraceStep {
    pub fn from_applied(mv: Move, a: &Applied) -> Self {
        TraceStep { mv, created: a.created.clone(), removed: a.removed.clone(), dual_pair: a.dual_pair.clone() }
    }
}

/// A sequence of applied moves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub steps: Vec<TraceStep>,
}

impl MoveTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.steps.iter().map(|s| &s.mv)
    }

    pub fn push(&mut self, mv: Move, a: &Applied) {
        self.steps.push(TraceStep::from_applied(mv, a));
    }

    pub fn extend(&mut self, other: MoveTrace) {
        self.steps.extend(other.steps);
    }

    /// Where each of `root`'s crossings ends up; `None` once it is removed.
    /// Ids are tracked per step, so an id reused after removal is a new crossing.
    pub fn correspondence(&self, root: &TangleDiagram) -> BTreeMap<CrossingId, Option<CrossingId>> {
        let mut map: BTreeMap<CrossingId, Option<CrossingId>> =
            root.crossings().keys().map(|v| (v.clone(), Some(v.clone()))).collect();
        for s in &self.steps {
            for target in map.values_mut() {
                if target.as_ref().is_some_and(|t| s.removed.contains(t)) {
                    *target = None;
                }
            }
        }
        map
    }

    /// Applies every move to `d` in order, recomputing the correspondence data.
    pub fn replay(&self, d: &TangleDiagram) -> Result<(TangleDiagram, MoveTrace)> {
        replay_moves(d, self.moves().cloned())
    }

    /// Parses a trace log; the part of each line after `|` is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").split('|').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mv = line.parse::<Move>().map_err(|e| match e {
                Error::TraceSyntax { message, .. } => Error::TraceSyntax { line: n + 1, message },
                other => other,
            })?;
            steps.push(TraceStep { mv, created: vec![], removed: vec![], dual_pair: None });
        }
        Ok(MoveTrace { steps })
    }
}

/// Applies `moves` in order and records the trace.
pub fn replay_moves(d: &TangleDiagram, moves: impl IntoIterator<Item = Move>) -> Result<(TangleDiagram, MoveTrace)> {
    let mut cur = d.clone();
    let mut trace = MoveTrace::default();
    for m in moves {
        let a = apply_move(&cur, &m)?;
        trace.push(m, &a);
        cur = a.diagram;
    }
    Ok((cur, trace))
}

impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.mv)?;
        for v in &self.created {
            write!(f, " +{v}")?;
        }
        for v in &self.removed {
            write!(f, " -{v}")?;
        }
        if let Some((x, y)) = &self.dual_pair {
            write!(f, " ε({x},{y})=1")?;
        }
        if self.created.is_empty() && self.removed.is_empty() {
            f.write_str(" =")?;
        }
        Ok(())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.component + 1, self.word, self.split)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1Add { id, at, over_first, chirality } => {
                write!(f, "R1+ {id} at={at} over-first={} chir={}", yes_no(*over_first), chirality.letter())
            }
            Move::R1Remove { id } => write!(f, "R1- {id}"),
            Move::R2Add { x, y, a, b, u, a_over, chirality, reverse } => write!(
                f,
                "R2+ {x} {y} a={a} b={b} u={u} a-over={} chir={} rev={}",
                yes_no(*a_over),
                chirality.letter(),
                yes_no(*reverse)
            ),
            Move::R2Remove { x, y } => write!(f, "R2- {x} {y}"),
            Move::R3 { crossings: [a, b, c] } => write!(f, "R3 {a} {b} {c}"),
        }
    }
}

fn syntax(message: impl Into<String>) -> Error {
    Error::TraceSyntax { line: 0, message: message.into() }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(':')
            .map(|x| x.parse::<usize>().map_err(|_| syntax(format!("bad point '{s}'"))))
            .collect::<Result<_>>()?;
        match parts[..] {
            [c, word, split] if c >= 1 => Ok(Point { component: c - 1, word, split }),
            _ => Err(syntax(format!("bad point '{s}'"))),
        }
    }
}

/// `key=value` fields after the positional ids.
struct Fields<'a>(BTreeMap<&'a str, &'a str>);

impl<'a> Fields<'a> {
    fn get(&self, key: &str) -> Result<&'a str> {
        self.0.get(key).copied().ok_or_else(|| syntax(format!("missing field '{key}'")))
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key)? {
            "yes" => Ok(true),
            "no" => Ok(false),
            v => Err(syntax(format!("field '{key}' must be yes or no, got '{v}'"))),
        }
    }

    fn chirality(&self) -> Result<Chirality> {
        match self.get("chir")? {
            "L" => Ok(Chirality::Left),
            "R" => Ok(Chirality::Right),
            v => Err(syntax(format!("chirality must be L or R, got '{v}'"))),
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let kind = tokens.next().ok_or_else(|| syntax("empty move"))?;
        let (ids, kv): (Vec<&str>, Vec<&str>) = tokens.partition(|t| !t.contains('='));
        let fields = Fields(kv.iter().filter_map(|t| t.split_once('=')).collect());
        let ids: Vec<CrossingId> = ids.into_iter().map(CrossingId::new).collect();
        let want = |n: usize| -> Result<()> {
            if ids.len() == n {
                Ok(())
            } else {
                Err(syntax(format!("{kind} takes {n} crossing ids, got {}", ids.len())))
            }
        };
        match kind {
            "R1+" => {
                want(1)?;
                Ok(Move::R1Add {
                    id: ids[0].clone(),
                    at: fields.get("at")?.parse()?,
                    over_first: fields.flag("over-first")?,
                    chirality: fields.chirality()?,
                })
            }
            "R1-" => {
                want(1)?;
                Ok(Move::R1Remove { id: ids[0].clone() })
            }
            "R2+" => {
                want(2)?;
                Ok(Move::R2Add {
                    x: ids[0].clone(),
                    y: ids[1].clone(),
                    a: fields.get("a")?.parse()?,
                    b: fields.get("b")?.parse()?,
                    u: Word::parse(fields.get("u")?).map_err(|e| syntax(e.to_string()))?,
                    a_over: fields.flag("a-over")?,
                    chirality: fields.chirality()?,
                    reverse: fields.flag("rev")?,
                })
            }
            "R2-" => {
                want(2)?;
                Ok(Move::R2Remove { x: ids[0].clone(), y: ids[1].clone() })
            }
            "R3" => {
                want(3)?;
                Ok(Move::R3 { crossings: [ids[0].clone(), ids[1].clone(), ids[2].clone()] })
            }
            other => Err(syntax(format!("unknown move '{other}'"))),
        }
    }
}
