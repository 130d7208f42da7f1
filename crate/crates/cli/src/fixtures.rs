//! Fixture diagrams bundled into the binary so `selftest` runs anywhere.

use tangle_core::{parse_diagram, TangleDiagram};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../fixtures/", $name)))),*]
    };
}

pub const FIXTURES: &[(&str, &str)] = bundled![
    "annulus_knot.tdg",
    "annulus_two_windings.tdg",
    "disk_long_knot.tdg",
    "genus2_flat.tdg",
    "pants_knot.tdg",
    "sphere_hopf.tdg",
    "sphere_trefoil.tdg",
    "torus_knot.tdg",
    "triangle_flat.tdg",
];

/// A bundled fixture by file name.
pub fn fixture(name: &str) -> TangleDiagram {
    let (_, text) = FIXTURES.iter().find(|(n, _)| *n == name).unwrap_or_else(|| panic!("no fixture {name}"));
    parse_diagram(text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn all() -> impl Iterator<Item = (&'static str, TangleDiagram)> {
    FIXTURES.iter().map(|(n, _)| (*n, fixture(n)))
}
