use std::fmt;

use super::PhratryGraph;
use crate::classify::{flat_dual_phratry, flat_same_phratry, flat_same_tribe, is_self_dual, same_phratry, same_tribe};
use crate::diagram::{CrossingId, TangleDiagram};
use crate::error::Result;
use crate::group::EqualityVerdict;

/// What the graph says about a pair of crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphVerdict {
    Disconnected,
    Even,
    Odd,
    /// Connected inside a self-dual component.
    SelfDual,
}

impl fmt::Display for GraphVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphVerdict::Disconnected => "disconnected",
            GraphVerdict::Even => "even",
            GraphVerdict::Odd => "odd",
            GraphVerdict::SelfDual => "self-dual",
        })
    }
}

/// Graph and classifier verdicts on one unordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub v: CrossingId,
    pub w: CrossingId,
    pub graph: GraphVerdict,
    pub tribe: EqualityVerdict,
    pub phratry: EqualityVerdict,
    pub dual: EqualityVerdict,
    /// The graph claims a relation the classifier denies.
    pub soundness_violation: bool,
    /// The classifier relates the pair more finely than the graph found.
    pub completeness_gap: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub pairs: Vec<PairCheck>,
    /// Self-dual graph components whose representative fails the classifier's test.
    pub self_dual_mismatches: Vec<CrossingId>,
    /// Self-dual by the classifier but no odd cycle was found.
    pub self_dual_gaps: Vec<CrossingId>,
    pub incomplete: bool,
}

impl ComparisonReport {
    pub fn soundness_violations(&self) -> usize {
        self.pairs.iter().filter(|p| p.soundness_violation).count() + self.self_dual_mismatches.len()
    }

    pub fn completeness_gaps(&self) -> usize {
        self.pairs.iter().filter(|p| p.completeness_gap).count() + self.self_dual_gaps.len()
    }

    pub fn undecided(&self) -> usize {
        self.pairs.iter().filter(|p| !p.tribe.is_decided() || !p.phratry.is_decided()).count()
    }
}

fn graph_verdict(g: &PhratryGraph, v: &CrossingId, w: &CrossingId) -> GraphVerdict {
    match g.component_of(v) {
        Some(c) => match (c.position(v), c.position(w)) {
            (Some(_), Some(_)) if c.self_dual => GraphVerdict::SelfDual,
            (Some(i), Some(j)) if c.parity[i] == c.parity[j] => GraphVerdict::Even,
            (Some(_), Some(_)) => GraphVerdict::Odd,
            _ => GraphVerdict::Disconnected,
        },
        None => GraphVerdict::Disconnected,
    }
}

/// Dual phratries of a classical diagram: same tribe, opposite signs.
fn classical_dual(d: &TangleDiagram, v: &CrossingId, w: &CrossingId) -> Result<EqualityVerdict> {
    let opposite = EqualityVerdict::from_bool(d.crossing_sign(v)? != d.crossing_sign(w)?);
    Ok(same_tribe(d, v, w)?.and(opposite))
}

/// Checks every pair of crossings against the classifier. A connection in
/// the graph must be a classifier relation; the converse may fail only
/// through budget limits.
pub fn compare_with_classifier(d: &TangleDiagram, g: &PhratryGraph) -> Result<ComparisonReport> {
    let ids = &g.vertices;
    let mut pairs = Vec::new();
    for (i, v) in ids.iter().enumerate() {
        for w in &ids[i..] {
            let graph = graph_verdict(g, v, w);
            let (tribe, phratry, dual) = if d.is_flat() {
                (flat_same_tribe(d, v, w)?, flat_same_phratry(d, v, w)?, flat_dual_phratry(d, v, w)?)
            } else {
                (same_tribe(d, v, w)?, same_phratry(d, v, w)?, classical_dual(d, v, w)?)
            };
            let soundness_violation = match graph {
                GraphVerdict::Disconnected => false,
                GraphVerdict::Even => !phratry.is_equal() && phratry.is_decided(),
                GraphVerdict::Odd => !dual.is_equal() && dual.is_decided(),
                GraphVerdict::SelfDual => tribe.is_not_equal(),
            };
            let completeness_gap = match graph {
                GraphVerdict::Disconnected => tribe.is_equal(),
                GraphVerdict::Even => false,
                GraphVerdict::Odd => phratry.is_equal(),
                GraphVerdict::SelfDual => false,
            };
            pairs.push(PairCheck {
                v: v.clone(),
                w: w.clone(),
                graph,
                tribe,
                phratry,
                dual,
                soundness_violation,
                completeness_gap,
            });
        }
    }
    let mut self_dual_mismatches = Vec::new();
    let mut self_dual_gaps = Vec::new();
    for c in &g.components {
        let rep = &c.members[0];
        let [a, _] = d.locate(rep)?;
        let closed_self = d.is_flat() && d.is_self_crossing(rep)? && d.component(a.component).is_closed();
        let classifier = closed_self && is_self_dual(d, rep)?;
        match (c.self_dual, classifier) {
            (true, false) => self_dual_mismatches.push(rep.clone()),
            (false, true) => self_dual_gaps.push(rep.clone()),
            _ => {}
        }
    }
    Ok(ComparisonReport { pairs, self_dual_mismatches, self_dual_gaps, incomplete: g.incomplete })
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pairs {
            let mark = if p.soundness_violation {
                " VIOLATION"
            } else if p.completeness_gap {
                " gap"
            } else {
                ""
            };
            writeln!(f, "{} {} graph={} tribe={} phratry={}{}", p.v, p.w, p.graph, p.tribe, p.phratry, mark)?;
        }
        for v in &self.self_dual_mismatches {
            writeln!(f, "self-dual component at {v} fails the classifier test VIOLATION")?;
        }
        for v in &self.self_dual_gaps {
            writeln!(f, "component at {v} is self-dual by the classifier but no odd cycle was found gap")?;
        }
        writeln!(
            f,
            "soundness-violations={} completeness-gaps={} undecided={} incomplete={}",
            self.soundness_violations(),
            self.completeness_gaps(),
            self.undecided(),
            if self.incomplete { "yes" } else { "no" }
        )
    }
}
