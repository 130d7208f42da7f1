use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle_core::diagram::{random_diagram, ComponentKind, RandomShape};
use tangle_core::moves::{random_walk, WalkConfig};
use tangle_core::SurfacePresentation;

use super::STEPS_PER_FAMILY;
use crate::verify::{check_trace, TraceCheck};
use crate::CliResult;

fn families() -> CliResult<Vec<(&'static str, SurfacePresentation, Vec<ComponentKind>)>> {
    use ComponentKind::*;
    Ok(vec![
        ("sphere", SurfacePresentation::sphere(), vec![Closed, Closed]),
        ("annulus", SurfacePresentation::annulus(), vec![Closed, Long]),
        ("torus", SurfacePresentation::torus(), vec![Closed]),
        ("genus-2-boundary", SurfacePresentation::new(2, 1)?, vec![Closed, Long]),
    ])
}

/// Random walks from random diagrams, classical and flat in turn, with
/// every step checked for value preservation and pair duality.
pub(super) fn move_suite() -> CliResult<(bool, String)> {
    let cfg = WalkConfig::default();
    let mut passed = true;
    let mut detail = Vec::new();
    for (name, surface, kinds) in families()? {
        let mut total = TraceCheck::default();
        let mut seed = 0u64;
        while total.steps < STEPS_PER_FAMILY && seed < 10 * STEPS_PER_FAMILY as u64 {
            let shape = RandomShape {
                surface: surface.clone(),
                crossings: 3,
                kinds: kinds.clone(),
                flat: seed % 2 == 1,
                max_word_len: 2,
            };
            let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shape);
            let (_, trace) = random_walk(&d, 60, seed, &cfg)?;
            total.absorb(check_trace(&d, &trace)?.1);
            seed += 1;
        }
        passed &= total.passed() && total.steps >= STEPS_PER_FAMILY;
        detail.push(format!(
            "{name}: steps={} pairs={} I0={} I2={}",
            total.steps,
            total.pairs,
            total.i0.len(),
            total.i2.len()
        ));
    }
    Ok((passed, detail.join(" ")))
}
