use std::path::PathBuf;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangle_core::classify::{classify, flat_classify, flat_dual_phratry, flat_same_tribe, same_tribe};
use tangle_core::diagram::{parse_diagram, random_diagram, ComponentKind, CrossingId, RandomShape, TangleDiagram};
use tangle_core::moves::{
    apply_move, classes_preserved, enumerate_moves, insertion_points, pull_crossing, pull_sprout, random_walk,
    word_dictionary, Move, MoveBudget, MoveTrace, Point, WalkConfig,
};
use tangle_core::{Chirality, EqualityVerdict, Error, SurfacePresentation, Word};

fn fixture(name: &str) -> TangleDiagram {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    parse_diagram(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn id(s: &str) -> CrossingId {
    CrossingId::new(s)
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

const REMOVALS_ONLY: MoveBudget = MoveBudget { max_crossings: 0, max_word_len: 0, insertions: false };

fn removals(d: &TangleDiagram) -> Vec<String> {
    enumerate_moves(d, &REMOVALS_ONLY).iter().filter(|m| m.is_removal()).map(|m| m.to_string()).collect()
}

/// Every surviving crossing keeps its index value, compared across diagrams.
fn values_preserved(before: &TangleDiagram, after: &TangleDiagram) -> bool {
    let p = before.surface();
    before.crossings().keys().filter(|v| after.crossings().contains_key(*v)).all(|v| {
        if before.is_flat() {
            let (x, y) = (flat_classify(before, v).unwrap(), flat_classify(after, v).unwrap());
            x.same_phratry(&y, p).unwrap().is_equal()
        } else {
            let (x, y) = (classify(before, v).unwrap(), classify(after, v).unwrap());
            x.same_phratry(&y, p).unwrap().is_equal()
        }
    })
}

#[test]
fn triangle_fixture_has_kinks_then_a_bigon() {
    let d = fixture("triangle_flat.tdg");
    assert_eq!(removals(&d), ["R1- u", "R1- v", "R1- w"]);
    let after = apply_move(&d, &Move::R1Remove { id: id("u") }).unwrap().diagram;
    assert!(removals(&after).contains(&"R2- v w".to_string()));
}

#[test]
fn annulus_kink_is_not_removable() {
    let d = fixture("annulus_knot.tdg");
    assert!(removals(&d).is_empty());
    assert!(matches!(apply_move(&d, &Move::R1Remove { id: id("x1") }), Err(Error::InvalidSite(_))));
}

#[test]
fn minimal_fixtures_have_no_removals() {
    for f in ["sphere_trefoil.tdg", "sphere_hopf.tdg", "torus_knot.tdg"] {
        assert!(removals(&fixture(f)).is_empty(), "{f}");
    }
}

#[test]
fn r2_on_annulus_keeps_kappa_and_is_found() {
    let d = fixture("annulus_knot.tdg");
    let m = Move::R2Add {
        x: id("n1"),
        y: id("n2"),
        a: Point { component: 0, word: 0, split: 1 },
        b: Point { component: 0, word: 1, split: 0 },
        u: w("T"),
        a_over: true,
        chirality: Chirality::Left,
        reverse: false,
    };
    let a = apply_move(&d, &m).unwrap();
    assert_eq!(a.diagram.component_class(0), d.component_class(0));
    assert_eq!(a.dual_pair, Some((id("n1"), id("n2"))));
    assert!(removals(&a.diagram).contains(&"R2- n1 n2".to_string()));
    let back = apply_move(&a.diagram, &Move::R2Remove { x: id("n1"), y: id("n2") }).unwrap();
    assert_eq!(back.diagram, d);
}

#[test]
fn r3_keeps_ids_and_twice_keeps_values() {
    let d = fixture("triangle_flat.tdg");
    let m = Move::R3 { crossings: [id("u"), id("v"), id("w")] };
    let once = apply_move(&d, &m).unwrap();
    assert!(once.created.is_empty() && once.removed.is_empty());
    assert_eq!(once.diagram.crossings().len(), 3);
    assert!(values_preserved(&d, &once.diagram));
    let twice = apply_move(&once.diagram, &m).unwrap();
    assert!(values_preserved(&d, &twice.diagram));
}

#[test]
fn trace_text_round_trips_and_replays() {
    let d = fixture("sphere_trefoil.tdg");
    let (end, trace) = random_walk(&d, 25, 7, &WalkConfig::default()).unwrap();
    let text = trace.to_string();
    let parsed = MoveTrace::parse(&text).unwrap();
    let (replayed, again) = parsed.replay(&d).unwrap();
    assert_eq!(replayed, end);
    assert_eq!(again.to_string(), text);
    assert!(matches!(MoveTrace::parse("R2- x1\n"), Err(Error::TraceSyntax { line: 1, .. })));
    assert!(matches!(MoveTrace::parse("\nR9 a\n"), Err(Error::TraceSyntax { line: 2, .. })));
}

#[test]
fn random_walks_are_deterministic() {
    for f in ["sphere_trefoil.tdg", "annulus_knot.tdg", "triangle_flat.tdg"] {
        let d = fixture(f);
        let cfg = WalkConfig::default();
        let a = random_walk(&d, 40, 99, &cfg).unwrap();
        let b = random_walk(&d, 40, 99, &cfg).unwrap();
        assert_eq!(a.1.to_string(), b.1.to_string(), "{f}");
        assert_eq!(a.0, b.0);
        assert!(!a.1.is_empty());
    }
}

#[test]
fn fixture_pulls_replay_and_keep_values() {
    let cases = [("sphere_trefoil.tdg", "x1", "x3"), ("genus2_flat.tdg", "y1", "y5"), ("triangle_flat.tdg", "u", "w")];
    for (f, b, a) in cases {
        let d = fixture(f);
        let (end, trace) = pull_crossing(&d, &id(b), &id(a)).unwrap_or_else(|e| panic!("{f}: {e}"));
        assert!(!trace.is_empty(), "{f}");
        let (replayed, _) = MoveTrace::parse(&trace.to_string()).unwrap().replay(&d).unwrap();
        assert_eq!(replayed, end);
        assert!(values_preserved(&d, &end), "{f}");
        assert!(classes_preserved(&d, &end));
    }
}

#[test]
fn pull_off_the_walk_is_rejected() {
    let text = "surface genus=0 boundary=0\nflat\ncomponent A closed\nwalk: k:first:L k:second\ncomponent B closed\nwalk: c:first:L c:second\n";
    let d = parse_diagram(text).unwrap();
    assert!(matches!(pull_crossing(&d, &id("k"), &id("c")), Err(Error::PathNotOnDiagram(_))));
    assert!(matches!(pull_crossing(&d, &id("k"), &id("zz")), Err(Error::UnknownCrossing(_))));
    let hopf = fixture("sphere_hopf.tdg");
    let (end, trace) = pull_crossing(&hopf, &id("x1"), &id("x2")).unwrap();
    assert!(trace.is_empty());
    assert_eq!(end, hopf);
}

#[test]
fn trivial_sprout_is_undone_by_a_second_move() {
    let d = fixture("sphere_trefoil.tdg");
    let at = Point { component: 0, word: 2, split: 0 };
    let (s, trace) = pull_sprout(&d, at, &Word::identity()).unwrap();
    let (x, y) = trace.steps[0].dual_pair.clone().unwrap();
    let back = apply_move(&s, &Move::R2Remove { x, y }).unwrap();
    assert_eq!(back.diagram, d);
}

#[test]
fn sprout_along_t_matches_existing_crossing_type() {
    // κ = t², and the kink x1 has both halves equal to t
    let d = fixture("annulus_knot.tdg");
    let kappa = d.component_class(0);
    let p = d.surface();
    for (u, joins_x1) in [("t", false), ("T", true)] {
        let (s, trace) = pull_sprout(&d, Point { component: 0, word: 0, split: 0 }, &w(u)).unwrap();
        let (x, y) = trace.steps[0].dual_pair.clone().unwrap();
        assert_eq!(same_tribe(&s, &x, &y).unwrap(), EqualityVerdict::Equal);
        assert_eq!(classify(&s, &x).unwrap().sign, -classify(&s, &y).unwrap().sign);
        // the halves of a sprout crossing are u⁻¹ and κu
        let h = classify(&s, &x).unwrap().homotopy.representative().clone();
        let expected = [w(u).inverse(), kappa.mul(&w(u))];
        assert!(expected.iter().any(|e| p.equal_mod_power_conj(&h, e, &kappa).unwrap().is_equal()), "{u}: {h}");
        for v in [&x, &y] {
            assert_eq!(same_tribe(&s, v, &id("x1")).unwrap().is_equal(), joins_x1, "{u} {v}");
        }
    }
}

#[test]
fn dictionary_counts_reduced_words() {
    assert_eq!(word_dictionary(&SurfacePresentation::annulus(), 3).len(), 7);
    assert_eq!(word_dictionary(&SurfacePresentation::torus(), 2).len(), 1 + 4 + 12);
    assert_eq!(word_dictionary(&SurfacePresentation::sphere(), 4).len(), 1);
}

fn shapes(flat: bool) -> Vec<RandomShape> {
    use ComponentKind::*;
    let s = |surface, crossings, kinds| RandomShape { surface, crossings, kinds, flat, max_word_len: 2 };
    vec![
        s(SurfacePresentation::sphere(), 3, vec![Closed]),
        s(SurfacePresentation::annulus(), 3, vec![Closed]),
        s(SurfacePresentation::torus(), 3, vec![Closed, Closed]),
        s(SurfacePresentation::new(2, 1).unwrap(), 3, vec![Long, Closed]),
    ]
}

/// Checks every step of a trace: values of survivors are kept and each
/// second-move pair is dual.
fn check_trace(d: &TangleDiagram, trace: &MoveTrace) -> Result<(), TestCaseError> {
    let mut cur = d.clone();
    for step in &trace.steps {
        let a = apply_move(&cur, &step.mv).unwrap();
        prop_assert!(classes_preserved(&cur, &a.diagram));
        prop_assert!(values_preserved(&cur, &a.diagram), "{}", step.mv);
        if let (Some((x, y)), Move::R2Add { .. }) = (&step.dual_pair, &step.mv) {
            let nd = &a.diagram;
            if nd.is_flat() {
                prop_assert!(flat_same_tribe(nd, x, y).unwrap().is_equal());
                prop_assert!(flat_dual_phratry(nd, x, y).unwrap().is_equal());
            } else {
                prop_assert!(same_tribe(nd, x, y).unwrap().is_equal());
                prop_assert_eq!(classify(nd, x).unwrap().sign, -classify(nd, y).unwrap().sign);
            }
        }
        cur = a.diagram;
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn r1_add_then_remove_restores(seed in any::<u64>(), which in 0usize..4, flat in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, &shapes(flat)[which]);
        let points = insertion_points(&d);
        let at = points[rng.gen_range(0..points.len())];
        let m = Move::R1Add { id: id("k"), at, over_first: rng.gen(), chirality: Chirality::Right };
        let a = apply_move(&d, &m).unwrap();
        let back = apply_move(&a.diagram, &Move::R1Remove { id: id("k") }).unwrap();
        prop_assert_eq!(back.diagram, d);
    }

    #[test]
    fn r2_add_is_found_and_inverted(seed in any::<u64>(), which in 0usize..4, flat in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, &shapes(flat)[which]);
        let points = insertion_points(&d);
        let dict = word_dictionary(d.surface(), 2);
        let m = Move::R2Add {
            x: id("n1"),
            y: id("n2"),
            a: points[rng.gen_range(0..points.len())],
            b: points[rng.gen_range(0..points.len())],
            u: dict[rng.gen_range(0..dict.len())].clone(),
            a_over: rng.gen(),
            chirality: if rng.gen() { Chirality::Left } else { Chirality::Right },
            reverse: rng.gen(),
        };
        let a = apply_move(&d, &m).unwrap();
        prop_assert!(classes_preserved(&d, &a.diagram));
        let inverse = Move::R2Remove { x: id("n1"), y: id("n2") };
        let swapped = Move::R2Remove { x: id("n2"), y: id("n1") };
        let found = enumerate_moves(&a.diagram, &REMOVALS_ONLY);
        prop_assert!(found.contains(&inverse) || found.contains(&swapped));
        prop_assert_eq!(apply_move(&a.diagram, &inverse).unwrap().diagram, d);
    }

    #[test]
    fn random_walks_preserve_values_and_pair_duality(seed in any::<u64>(), which in 0usize..4, flat in any::<bool>()) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes(flat)[which]);
        let cfg = WalkConfig { max_crossings: 7, ..WalkConfig::default() };
        let (end, trace) = random_walk(&d, 12, seed, &cfg).unwrap();
        prop_assert!(end.crossing_count() <= 7.max(d.crossing_count()));
        check_trace(&d, &trace)?;
        let corr = trace.correspondence(&d);
        for (v, target) in &corr {
            // ids may be reused after removal, so only survivors are pinned down
            if let Some(t) = target {
                prop_assert_eq!(t, v);
                prop_assert!(end.crossings().contains_key(v));
            }
        }
    }
}
