//! Step-by-step checks of a move trace: surviving crossings keep their
//! index value and every second-move pair is a dual pair.

use std::fmt;

use tangle_core::classify::{classify, flat_classify, flat_dual_phratry, flat_same_tribe, same_tribe};
use tangle_core::moves::{apply_move, classes_preserved, Move, MoveTrace};
use tangle_core::{CrossingId, EqualityVerdict, Result, TangleDiagram};

/// Index value of `v` in `before` against its value in `after`.
pub fn value_kept(before: &TangleDiagram, after: &TangleDiagram, v: &CrossingId) -> Result<EqualityVerdict> {
    let p = before.surface();
    if before.is_flat() {
        flat_classify(before, v)?.same_phratry(&flat_classify(after, v)?, p)
    } else {
        classify(before, v)?.same_phratry(&classify(after, v)?, p)
    }
}

/// Same tribe with opposite signs, or dual phratries when flat.
pub fn pair_is_dual(d: &TangleDiagram, x: &CrossingId, y: &CrossingId) -> Result<EqualityVerdict> {
    if d.is_flat() {
        Ok(flat_same_tribe(d, x, y)?.and(flat_dual_phratry(d, x, y)?))
    } else {
        let opposite = EqualityVerdict::from_bool(d.crossing_sign(x)? != d.crossing_sign(y)?);
        Ok(same_tribe(d, x, y)?.and(opposite))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TraceCheck {
    pub steps: usize,
    pub pairs: usize,
    pub comparisons: usize,
    pub undecided: usize,
    /// Failures of the correspondence law, one line each.
    pub i0: Vec<String>,
    /// Second-move pairs that are not dual.
    pub i2: Vec<String>,
}

impl TraceCheck {
    pub fn passed(&self) -> bool {
        self.i0.is_empty() && self.i2.is_empty()
    }

    pub fn absorb(&mut self, other: TraceCheck) {
        self.steps += other.steps;
        self.pairs += other.pairs;
        self.comparisons += other.comparisons;
        self.undecided += other.undecided;
        self.i0.extend(other.i0);
        self.i2.extend(other.i2);
    }
}

impl fmt::Display for TraceCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.i0.iter().chain(&self.i2) {
            writeln!(f, "violation {line}")?;
        }
        writeln!(
            f,
            "steps={} pairs={} comparisons={} undecided={} I0-violations={} I2-violations={}",
            self.steps,
            self.pairs,
            self.comparisons,
            self.undecided,
            self.i0.len(),
            self.i2.len()
        )
    }
}

fn tally(check: &mut TraceCheck, verdict: EqualityVerdict) -> bool {
    if !verdict.is_decided() {
        check.undecided += 1;
    }
    !verdict.is_not_equal()
}

/// Replays `trace` from `d`, checking each step.
pub fn check_trace(d: &TangleDiagram, trace: &MoveTrace) -> Result<(TangleDiagram, TraceCheck)> {
    let mut check = TraceCheck::default();
    let mut cur = d.clone();
    for (k, step) in trace.steps.iter().enumerate() {
        let applied = apply_move(&cur, &step.mv)?;
        let next = applied.diagram;
        check.steps += 1;
        if !classes_preserved(&cur, &next) {
            check.i0.push(format!("step {}: {}: component class changed", k + 1, step.mv));
        }
        for v in cur.crossings().keys().filter(|v| next.crossings().contains_key(*v)) {
            check.comparisons += 1;
            if !tally(&mut check, value_kept(&cur, &next, v)?) {
                check.i0.push(format!("step {}: {}: {v} changed value", k + 1, step.mv));
            }
        }
        if let Some((x, y)) = &applied.dual_pair {
            check.pairs += 1;
            let host = if matches!(step.mv, Move::R2Remove { .. }) { &cur } else { &next };
            if !tally(&mut check, pair_is_dual(host, x, y)?) {
                check.i2.push(format!("step {}: {}: {x},{y} not dual", k + 1, step.mv));
            }
        }
        cur = next;
    }
    Ok((cur, check))
}
