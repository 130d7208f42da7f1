use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle_core::classify::{classify_report, is_self_dual};
use tangle_core::diagram::{random_diagram, ComponentKind, RandomShape};
use tangle_core::explore::{build_phratry_graph, compare_with_classifier, flat_sphere_diagrams, ExploreBudget};
use tangle_core::{CrossingId, SurfacePresentation, TangleDiagram};

use super::within_tolerance;
use crate::fixtures;
use crate::CliResult;

/// Budget for the exhaustive sphere check: one crossing of headroom over
/// the diagram, no words, and depth limited only by the state cap.
fn exhaustive_budget(d: &TangleDiagram) -> ExploreBudget {
    ExploreBudget {
        max_crossings: (d.crossing_count() + 1).max(2),
        max_word_len: 0,
        max_depth: 100,
        max_states: 20_000,
    }
}

/// Exhaustive small sphere diagrams, every fixture at the default budget
/// and the self-dual triangle.
pub(super) fn oracle_equivalence() -> CliResult<(bool, String)> {
    let (mut diagrams, mut mismatched) = (0, 0);
    for links in [false, true] {
        for d in flat_sphere_diagrams(3, links) {
            diagrams += 1;
            let r = compare_with_classifier(&d, &build_phratry_graph(&d, &exhaustive_budget(&d)))?;
            mismatched += usize::from(r.soundness_violations() + r.completeness_gaps() > 0);
        }
    }
    let mut violations = 0;
    for (_, d) in fixtures::all() {
        let r = compare_with_classifier(&d, &build_phratry_graph(&d, &ExploreBudget::default()))?;
        violations += r.soundness_violations();
    }
    let tri = fixtures::fixture("triangle_flat.tdg");
    let g = build_phratry_graph(&tri, &ExploreBudget::default());
    let names: Vec<&str> = g.components.iter().flat_map(|c| c.members.iter().map(|m| m.as_str())).collect();
    let mut triangle_ok = g.components.len() == 1 && g.components[0].self_dual && names == ["u", "v", "w"];
    for v in ["u", "v", "w"] {
        triangle_ok &= is_self_dual(&tri, &CrossingId::new(v))?;
    }
    let passed = within_tolerance(mismatched) && within_tolerance(violations) && triangle_ok;
    Ok((
        passed,
        format!(
            "sphere-diagrams={diagrams} mismatched={mismatched} fixture-violations={violations} self-dual-triangle={}",
            if triangle_ok { "yes" } else { "no" }
        ),
    ))
}

/// Self-dual crossings found by the classifier or by the search, each
/// paired with its component.
fn self_dual_sites(d: &TangleDiagram, search: bool) -> CliResult<Vec<CrossingId>> {
    let mut out: Vec<CrossingId> = classify_report(d)?.into_iter().filter(|r| r.self_dual).map(|r| r.id).collect();
    if search {
        let g = build_phratry_graph(d, &ExploreBudget::default());
        out.extend(g.components.iter().filter(|c| c.self_dual).flat_map(|c| c.members.iter().cloned()));
    }
    Ok(out)
}

/// Every component carrying a self-dual crossing has a square class.
pub(super) fn square_gate() -> CliResult<(bool, String)> {
    let mut diagrams: Vec<(TangleDiagram, bool)> = Vec::new();
    for (_, d) in fixtures::all() {
        let flat = if d.is_flat() { d } else { d.flatten() };
        diagrams.push((flat, true));
    }
    use ComponentKind::*;
    let shapes = [
        RandomShape {
            surface: SurfacePresentation::annulus(),
            crossings: 3,
            kinds: vec![Closed],
            flat: true,
            max_word_len: 2,
        },
        RandomShape {
            surface: SurfacePresentation::torus(),
            crossings: 3,
            kinds: vec![Closed],
            flat: true,
            max_word_len: 2,
        },
        RandomShape {
            surface: SurfacePresentation::annulus(),
            crossings: 4,
            kinds: vec![Closed, Long],
            flat: true,
            max_word_len: 2,
        },
    ];
    for seed in 0..300u64 {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes[seed as usize % shapes.len()]);
        diagrams.push((d, false));
    }
    let (mut detected, mut bad) = (0, 0);
    for (d, search) in &diagrams {
        for v in self_dual_sites(d, *search)? {
            detected += 1;
            let [s0, _] = d.locate(&v)?;
            bad += usize::from(!d.surface().has_square_root(&d.component_class(s0.component))?);
        }
    }
    Ok((
        detected > 0 && within_tolerance(bad),
        format!("diagrams={} self-dual-detections={detected} non-square={bad}", diagrams.len()),
    ))
}
