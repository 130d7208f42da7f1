use std::collections::BTreeMap;
use std::time::Instant;

use tangle_core::classify::classify_report;
use tangle_core::moves::WalkConfig;
use tangle_core::{parse_diagram, CrossingId, Result, TangleDiagram};

use super::{walk_states, KNOT_MAX_CROSSINGS, KNOT_SAMPLES, KNOT_TIME_LIMIT, SEPARATION_MOVES};
use crate::commands::{tribes, Options};
use crate::fixtures::{fixture, FIXTURES};
use crate::CliResult;

fn disk_trefoil() -> TangleDiagram {
    let (_, text) = FIXTURES.iter().find(|(n, _)| *n == "sphere_trefoil.tdg").expect("trefoil");
    parse_diagram(&text.replace("boundary=0", "boundary=1")).expect("disk trefoil")
}

fn tribe_count(text: &str) -> Option<usize> {
    text.lines().find_map(|l| l.strip_prefix("tribe-count=")).and_then(|n| n.parse().ok())
}

/// Random closed knots on the sphere and the disk each form a single tribe.
pub(super) fn knot_triviality() -> CliResult<(bool, String)> {
    let cfg = WalkConfig {
        add_weight: 3,
        remove_weight: 1,
        r3_weight: 2,
        max_crossings: KNOT_MAX_CROSSINGS,
        max_word_len: 0,
    };
    let starts = [fixture("sphere_trefoil.tdg"), disk_trefoil()];
    let (mut samples, mut bad, mut slowest, mut largest) = (0, 0, 0.0f64, 0);
    for seed in 0..10 * KNOT_SAMPLES as u64 {
        if samples >= KNOT_SAMPLES {
            break;
        }
        let start = &starts[seed as usize % 2];
        let states = walk_states(start, 12 + seed as usize % 25, seed, &cfg)?;
        let d = states.last().expect("walk");
        if d.crossing_count() == 0 || d.crossing_count() > KNOT_MAX_CROSSINGS {
            continue;
        }
        samples += 1;
        largest = largest.max(d.crossing_count());
        let clock = Instant::now();
        let out = tribes(d, &Options::default())?;
        let took = clock.elapsed();
        slowest = slowest.max(took.as_secs_f64());
        if tribe_count(&out.text) != Some(1) || took >= KNOT_TIME_LIMIT {
            bad += 1;
        }
    }
    let passed = samples >= KNOT_SAMPLES && bad == 0;
    Ok((passed, format!("samples={samples} max-crossings={largest} not-one-tribe-or-slow={bad} slowest={slowest:.3}s")))
}

/// Does the tribe partition coincide with the partition by `key`?
fn partition_matches(d: &TangleDiagram, key: impl Fn(&TangleDiagram, &CrossingId) -> Result<String>) -> Result<bool> {
    let report = classify_report(d)?;
    let mut tribe_of_key: BTreeMap<String, usize> = BTreeMap::new();
    let mut key_of_tribe: BTreeMap<usize, String> = BTreeMap::new();
    for r in &report {
        let k = key(d, &r.id)?;
        let t = *tribe_of_key.entry(k.clone()).or_insert(r.tribe);
        let k2 = key_of_tribe.entry(r.tribe).or_insert_with(|| k.clone());
        if t != r.tribe || *k2 != k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Component type splits link tribes and order type splits long-knot
/// tribes, and nothing finer shows up along random walks.
pub(super) fn separation() -> CliResult<(bool, String)> {
    let cfg = WalkConfig { max_word_len: 0, ..WalkConfig::default() };
    let by_type = |d: &TangleDiagram, v: &CrossingId| Ok(format!("{:?}", d.component_type(v)?));
    let by_order = |d: &TangleDiagram, v: &CrossingId| Ok(d.order_type(v)?.to_string());
    let mut detail = Vec::new();
    let mut passed = true;
    for (name, start) in [("links", fixture("sphere_hopf.tdg")), ("long-knots", fixture("disk_long_knot.tdg"))] {
        let (mut moves, mut bad, mut seed) = (0, 0, 0u64);
        while moves < SEPARATION_MOVES {
            let steps = 50.min(SEPARATION_MOVES - moves);
            let states = walk_states(&start, steps, seed, &cfg)?;
            moves += states.len() - 1;
            for d in &states {
                let ok = if name == "links" { partition_matches(d, by_type)? } else { partition_matches(d, by_order)? };
                bad += usize::from(!ok);
            }
            seed += 1;
            if seed > 10 * SEPARATION_MOVES as u64 {
                break;
            }
        }
        passed &= bad == 0 && moves >= SEPARATION_MOVES;
        detail.push(format!("{name}: moves={moves} mismatched-states={bad}"));
    }
    Ok((passed, detail.join(" ")))
}
