use std::collections::BTreeMap;
use std::path::PathBuf;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle_core::diagram::{
    parse_diagram, random_diagram, serialize, Chirality, ComponentKind, CrossingId, LiftChoice, RandomShape,
    TangleDiagram, ZMembership,
};
use tangle_core::{Error, SurfacePresentation, ViolationKind, Word};

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

const FIXTURES: &[&str] = &[
    "annulus_knot.tdg",
    "sphere_trefoil.tdg",
    "triangle_flat.tdg",
    "torus_knot.tdg",
    "disk_long_knot.tdg",
    "sphere_hopf.tdg",
    "pants_knot.tdg",
    "genus2_flat.tdg",
];

#[test]
fn fixtures_round_trip() {
    for name in FIXTURES {
        let d = fixture(name);
        let again = parse_diagram(&serialize(&d)).unwrap();
        assert_eq!(again, d, "{name}");
    }
}

#[test]
fn annulus_knot_values() {
    let d = fixture("annulus_knot.tdg");
    assert_eq!(d.crossing_count(), 1);
    assert_eq!(d.component_class(0), w("tt"));
    let h = d.extract_halves(&id("x1")).unwrap();
    assert_eq!(h.positive, Some(w("t")));
    assert_eq!(h.negative, Some(w("t")));
    assert_eq!(d.crossing_sign(&id("x1")).unwrap(), 1);
}

#[test]
fn trefoil_halves_are_trivial() {
    let d = fixture("sphere_trefoil.tdg");
    assert!(d.component_class(0).is_identity());
    for v in d.crossings().keys() {
        let h = d.extract_halves(v).unwrap();
        for x in [h.positive.unwrap(), h.negative.unwrap(), h.left, h.right] {
            assert!(d.surface().is_trivial(&x).unwrap());
        }
    }
}

#[test]
fn single_visit_is_rejected_with_line() {
    let text = "surface genus=0 boundary=0\ncomponent K closed\nwalk: x1:over 1\nsign x1 +\n";
    match parse_diagram(text) {
        Err(Error::Invalid(v)) => {
            assert_eq!(v[0].kind, ViolationKind::WrongVisitCount);
            assert_eq!(v[0].line, Some(3));
        }
        other => panic!("expected violations, got {other:?}"),
    }
}

#[test]
fn other_violations() {
    let alpha = "surface genus=0 boundary=2\ncomponent K closed\nwalk: a x1:over x1:under\nsign x1 +\n";
    let Err(Error::Invalid(v)) = parse_diagram(alpha) else { panic!() };
    assert_eq!(v[0].kind, ViolationKind::AlphabetMismatch);
    let sign = "surface genus=0 boundary=0\ncomponent K closed\nwalk: x1:over:R x1:under\nsign x1 +\n";
    let Err(Error::Invalid(v)) = parse_diagram(sign) else { panic!() };
    assert_eq!((v[0].kind, v[0].line), (ViolationKind::InconsistentSign, Some(4)));
    let junk = "surface genus=0 boundary=0\nbogus\n";
    let Err(Error::Invalid(v)) = parse_diagram(junk) else { panic!() };
    assert_eq!((v[0].kind, v[0].line), (ViolationKind::Syntax, Some(2)));
}

#[test]
fn quoted_and_omitted_words() {
    let text = "surface genus=0 boundary=2\ncomponent K closed\nwalk: \"t\" x1:over \"\" x1:under \"\"\nsign x1 +\n";
    let d = parse_diagram(text).unwrap();
    assert_eq!(d.component_class(0), w("t"));
    let h = d.extract_halves(&id("x1")).unwrap();
    // the over pass comes first, so the positive half wraps through the basepoint
    assert_eq!(h.z_membership, Some(ZMembership::InPositive));
    assert_eq!(h.positive, Some(w("t")));
    assert_eq!(h.negative, Some(w("1")));
}

#[test]
fn types_and_signs() {
    let d = fixture("disk_long_knot.tdg");
    assert_eq!(d.order_type(&id("x1")).unwrap(), -1);
    assert_eq!(d.order_type(&id("x2")).unwrap(), 1);
    assert!(d.component_class(0).is_identity());
    let hopf = fixture("sphere_hopf.tdg");
    assert_eq!(hopf.component_type(&id("x1")).unwrap(), (0, 1));
    assert_eq!(hopf.component_type(&id("x2")).unwrap(), (1, 0));
    // left chirality with the over strand met first is a positive crossing
    let t = "surface genus=0 boundary=0\ncomponent K closed\nwalk: x1:over:L x1:under\n";
    assert_eq!(parse_diagram(t).unwrap().crossing_sign(&id("x1")).unwrap(), 1);
    let t = "surface genus=0 boundary=0\ncomponent K closed\nwalk: x1:under:L x1:over\n";
    assert_eq!(parse_diagram(t).unwrap().crossing_sign(&id("x1")).unwrap(), -1);
}

#[test]
fn crossing_change_effects() {
    let hopf = fixture("sphere_hopf.tdg");
    let c = hopf.crossing_change(&id("x1")).unwrap();
    assert_eq!(c.component_type(&id("x1")).unwrap(), (1, 0));
    assert_eq!(c.crossing_sign(&id("x1")).unwrap(), -1);
    assert_eq!(c.visit_chirality(&id("x1")).unwrap(), hopf.visit_chirality(&id("x1")).unwrap());
    let long = fixture("disk_long_knot.tdg");
    assert_eq!(long.crossing_change(&id("x1")).unwrap().order_type(&id("x1")).unwrap(), 1);
    assert_eq!(c.crossing_change(&id("x1")).unwrap(), hopf);
}

#[test]
fn flatten_lift_round_trip() {
    for name in ["sphere_trefoil.tdg", "annulus_knot.tdg", "sphere_hopf.tdg", "pants_knot.tdg"] {
        let d = fixture(name);
        let flat = d.flatten();
        let choices: BTreeMap<CrossingId, LiftChoice> = flat
            .crossings()
            .keys()
            .map(|v| {
                let [s0, s1] = d.locate(v).unwrap();
                (v.clone(), if s0 < s1 { LiftChoice::FirstOver } else { LiftChoice::SecondOver })
            })
            .collect();
        assert_eq!(flat.lift(&choices).unwrap(), d, "{name}");
        assert_eq!(flat.lift(&choices).unwrap().flatten(), flat);
    }
    let flat = fixture("triangle_flat.tdg");
    assert!(matches!(flat.lift(&BTreeMap::new()), Err(Error::MissingChoice(_))));
}

#[test]
fn flat_chirality_survives_normalization() {
    let d = fixture("triangle_flat.tdg");
    for v in d.crossings().keys() {
        assert_eq!(d.visit_chirality(v).unwrap(), Chirality::Left);
    }
}

fn shape(surface: SurfacePresentation, crossings: usize, kinds: Vec<ComponentKind>, flat: bool) -> RandomShape {
    RandomShape { surface, crossings, kinds, flat, max_word_len: 3 }
}

fn shapes() -> Vec<RandomShape> {
    use ComponentKind::*;
    vec![
        shape(SurfacePresentation::new(0, 3).unwrap(), 4, vec![Closed], false),
        shape(SurfacePresentation::new(1, 1).unwrap(), 5, vec![Closed, Closed], false),
        shape(SurfacePresentation::torus(), 4, vec![Closed, Long], true),
        shape(SurfacePresentation::annulus(), 3, vec![Long, Closed], false),
        shape(SurfacePresentation::new(2, 0).unwrap(), 4, vec![Closed], true),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_round_trip(seed in any::<u64>(), which in 0usize..5) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes()[which]);
        prop_assert_eq!(parse_diagram(&serialize(&d)).unwrap(), d);
    }

    #[test]
    fn halves_multiply_to_component_class(seed in any::<u64>(), which in 0usize..5) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes()[which]);
        for v in d.crossings().keys() {
            let [a, b] = d.locate(v).unwrap();
            if a.component != b.component || !d.component(a.component).is_closed() {
                continue;
            }
            let h = d.extract_halves(v).unwrap();
            let kappa = d.component_class(a.component);
            prop_assert_eq!(h.loop_product(), kappa.clone());
            if let (Some(p), Some(n), Some(m)) = (h.positive, h.negative, h.z_membership) {
                let prod = match m { ZMembership::InPositive => n.mul(&p), ZMembership::InNegative => p.mul(&n) };
                prop_assert_eq!(prod, kappa);
            }
        }
    }

    #[test]
    fn basepoint_rotation_moves_halves_within_kappa_orbit(seed in any::<u64>(), which in 0usize..4, turns in 1usize..6) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes()[which]);
        let Some(ci) = (0..d.components().len()).find(|&i| d.component(i).is_closed()) else { return Ok(()) };
        let mut r = d.clone();
        for _ in 0..turns {
            r = r.rotate_basepoint(ci).unwrap();
        }
        prop_assert_eq!(r.component_class(ci), d.component_class(ci));
        let p = d.surface();
        for v in d.crossings().keys() {
            let [a, b] = d.locate(v).unwrap();
            if a.component != ci || b.component != ci {
                continue;
            }
            let (h0, h1) = (d.extract_halves(v).unwrap(), r.extract_halves(v).unwrap());
            let k = d.component_class(ci);
            prop_assert!(p.equal_mod_power_conj(&h0.left, &h1.left, &k).unwrap().is_equal());
            if let (Some(x), Some(y)) = (h0.positive, h1.positive) {
                prop_assert!(p.equal_mod_power_conj(&x, &y, &k).unwrap().is_equal());
            }
        }
    }

    #[test]
    fn crossing_change_is_an_involution(seed in any::<u64>(), which in 0usize..2) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes()[which]);
        for v in d.crossings().keys() {
            let c = d.crossing_change(v).unwrap();
            prop_assert_eq!(c.crossing_sign(v).unwrap(), -d.crossing_sign(v).unwrap());
            prop_assert_eq!(c.crossing_change(v).unwrap(), d.clone());
        }
    }

    #[test]
    fn gauge_keeps_all_path_classes(seed in any::<u64>(), g in "[abAB]{0,4}") {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shapes()[1]);
        let g = w(&g);
        for v in d.crossings().keys() {
            let e = d.gauge(v, &g).unwrap();
            for u in d.crossings().keys() {
                let [a, b] = d.locate(u).unwrap();
                if a.component == b.component && d.component(a.component).is_closed() {
                    prop_assert_eq!(e.extract_halves(u).unwrap(), d.extract_halves(u).unwrap());
                } else if a.component != b.component {
                    prop_assert_eq!(e.mixed_path_word(u).unwrap(), d.mixed_path_word(u).unwrap());
                }
            }
        }
    }
}
