use std::collections::BTreeMap;
use std::path::PathBuf;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle_core::classify::{
    classify, classify_report, flat_classify, flat_dual_phratry, flat_same_phratry, flat_same_tribe, index_polynomial,
    is_self_dual, same_phratry, same_tribe, universal_index, Coarsening, HomotopyValue, Selector,
};
use tangle_core::diagram::{
    parse_diagram, random_diagram, ComponentKind, CrossingId, LiftChoice, RandomShape, TangleDiagram,
};
use tangle_core::{EqualityVerdict, Error, SurfacePresentation, Word};

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

#[test]
fn annulus_and_torus_values() {
    let d = fixture("annulus_knot.tdg");
    let u = universal_index(&d, &id("x1"), Coarsening::ExactAbelian).unwrap();
    assert_eq!(u.homology, Some(vec![1]));
    let t = fixture("torus_knot.tdg");
    let u = universal_index(&t, &id("x1"), Coarsening::ExactAbelian).unwrap();
    let halves = t.extract_halves(&id("x1")).unwrap();
    assert_eq!(u.homology, Some(t.surface().homology(&halves.positive.unwrap())));
    assert_eq!(u.homology, Some(vec![1, 0]));
    let s = fixture("sphere_trefoil.tdg");
    let vals: Vec<_> =
        s.crossings().keys().map(|v| universal_index(&s, v, Coarsening::ExactAbelian).unwrap()).collect();
    assert!(vals.windows(2).all(|p| p[0] == p[1]));
}

#[test]
fn exact_abelian_refused_on_nonabelian_surfaces() {
    let d = fixture("pants_knot.tdg");
    assert!(matches!(universal_index(&d, &id("x1"), Coarsening::ExactAbelian), Err(Error::UnsupportedCoarsening(_))));
    assert!(universal_index(&d, &id("x1"), Coarsening::ModCentralizer).is_ok());
}

#[test]
fn centralizer_coarsening_uses_the_primitive_root() {
    // κ = (ab)², whose centralizer is generated by ab
    let text = "surface genus=0 boundary=3\ncomponent K closed\nwalk: ab x1:over:L a x1:under b\n";
    let d = parse_diagram(text).unwrap();
    assert_eq!(d.component_class(0), w("abab"));
    let p = d.surface();
    let delta = d.extract_halves(&id("x1")).unwrap().positive.unwrap();
    let k = universal_index(&d, &id("x1"), Coarsening::ModKappa).unwrap();
    let c = universal_index(&d, &id("x1"), Coarsening::ModCentralizer).unwrap();
    assert_eq!(k.homotopy, p.canonical_power_conj(&delta, &w("abab")).unwrap());
    assert_eq!(c.homotopy, p.canonical_power_conj(&delta, &w("ab")).unwrap());
}

#[test]
fn trefoil_is_one_tribe() {
    let d = fixture("sphere_trefoil.tdg");
    let report = classify_report(&d).unwrap();
    assert!(report.iter().all(|l| l.tribe == 1));
}

#[test]
fn long_knot_and_link_separation() {
    let d = fixture("disk_long_knot.tdg");
    assert_eq!(same_tribe(&d, &id("x1"), &id("x2")).unwrap(), EqualityVerdict::NotEqual);
    let h = fixture("sphere_hopf.tdg");
    assert_eq!(same_tribe(&h, &id("x1"), &id("x2")).unwrap(), EqualityVerdict::NotEqual);
    let flat = h.flatten();
    assert_eq!(flat_same_tribe(&flat, &id("x1"), &id("x2")).unwrap(), EqualityVerdict::Equal);
}

#[test]
fn self_duality() {
    let tri = fixture("triangle_flat.tdg");
    for v in ["u", "v", "w"] {
        assert!(is_self_dual(&tri, &id(v)).unwrap());
    }
    let flat = fixture("annulus_knot.tdg").flatten();
    assert!(is_self_dual(&flat, &id("x1")).unwrap());
    let text = "surface genus=0 boundary=2\ncomponent K closed\nwalk: tt x1:first:L 1 x1:second 1\n";
    let d = parse_diagram(text).unwrap();
    assert_eq!(d.extract_halves(&id("x1")).unwrap().left, w("tt"));
    assert!(!is_self_dual(&d, &id("x1")).unwrap());
}

#[test]
fn removable_bigon_pair() {
    let text = "surface genus=0 boundary=0\ncomponent A closed\nwalk: x1:over x2:over\ncomponent B closed\nwalk: x1:under x2:under\nsign x1 +\nsign x2 -\n";
    let d = parse_diagram(text).unwrap();
    assert!(same_tribe(&d, &id("x1"), &id("x2")).unwrap().is_equal());
    assert!(same_phratry(&d, &id("x1"), &id("x2")).unwrap().is_not_equal());
    let f = d.flatten();
    assert!(flat_same_tribe(&f, &id("x1"), &id("x2")).unwrap().is_equal());
    assert!(flat_dual_phratry(&f, &id("x1"), &id("x2")).unwrap().is_equal());
    assert!(flat_same_phratry(&f, &id("x1"), &id("x2")).unwrap().is_not_equal());
}

#[test]
fn polynomials() {
    let d = fixture("annulus_knot.tdg");
    let p = index_polynomial(&d, Selector::Universal).unwrap();
    assert_eq!(p.terms.len(), 1);
    let (k, c) = p.terms.iter().next().unwrap();
    assert_eq!((k.homotopy.clone(), *c), (Some(w("t")), 1));
    let t = fixture("sphere_trefoil.tdg");
    let p = index_polynomial(&t, Selector::Universal).unwrap();
    assert_eq!(p.terms.values().copied().collect::<Vec<_>>(), vec![3]);
    let h = fixture("sphere_hopf.tdg");
    assert_eq!(index_polynomial(&h, Selector::ComponentOnly).unwrap().terms.len(), 2);
}

#[test]
fn genus_two_flat_values() {
    let d = fixture("genus2_flat.tdg");
    let p = d.surface();
    let e_sub = |s: &str| w(s).substitute(|c| if c == b'e' { w("DCBA") } else { w(&(c as char).to_string()) });
    let kappa = d.component_class(0);
    assert!(p.words_equal(&kappa, &e_sub("cebda")).unwrap());
    let listed = ["c", "a", "Ada", "ADbda", "ceC"];
    let ids = ["y2", "y5", "y4", "y3", "y1"];
    for (v, x) in ids.iter().zip(listed) {
        let got = flat_classify(&d, &id(v)).unwrap();
        let expected = HomotopyValue::PowerConjInvolution { h: e_sub(x), kappa: kappa.clone() };
        assert_eq!(got.homotopy.same(&expected, p).unwrap(), EqualityVerdict::Equal, "{v} vs {x}");
    }
}

fn flat_shapes() -> Vec<RandomShape> {
    use ComponentKind::*;
    let s = |surface, crossings, kinds| RandomShape { surface, crossings, kinds, flat: true, max_word_len: 2 };
    vec![
        s(SurfacePresentation::annulus(), 3, vec![Closed]),
        s(SurfacePresentation::torus(), 4, vec![Closed, Closed]),
        s(SurfacePresentation::new(0, 3).unwrap(), 4, vec![Closed, Long]),
        s(SurfacePresentation::annulus(), 4, vec![Long, Closed]),
    ]
}

fn classical_shapes() -> Vec<RandomShape> {
    flat_shapes().into_iter().map(|s| RandomShape { flat: false, ..s }).collect()
}

fn all_lifts(d: &TangleDiagram) -> Vec<TangleDiagram> {
    let ids: Vec<CrossingId> = d.crossings().keys().cloned().collect();
    (0..1u32 << ids.len())
        .map(|mask| {
            let choices: BTreeMap<CrossingId, LiftChoice> = ids
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    (v.clone(), if mask >> i & 1 == 0 { LiftChoice::FirstOver } else { LiftChoice::SecondOver })
                })
                .collect();
            d.lift(&choices).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flat_tribe_is_existence_of_a_matching_lift(seed in any::<u64>(), which in 0usize..4) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &flat_shapes()[which]);
        let lifts = all_lifts(&d);
        let ids = d.crossings_in_walk_order();
        for v in &ids {
            for u in &ids {
                let flat = flat_same_tribe(&d, v, u).unwrap().is_equal();
                let brute = lifts.iter().any(|l| same_tribe(l, v, u).unwrap().is_equal());
                prop_assert_eq!(flat, brute, "{} {}", v, u);
            }
        }
    }

    #[test]
    fn crossing_change_law(seed in any::<u64>(), which in 0usize..4) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &classical_shapes()[which]);
        let p = d.surface();
        for v in d.crossings().keys() {
            let before = classify(&d, v).unwrap();
            let after = classify(&d.crossing_change(v).unwrap(), v).unwrap();
            let (i, j) = before.component_type;
            prop_assert_eq!(after.component_type, (j, i));
            prop_assert_eq!(after.order, before.order.map(|o| -o));
            if let (HomotopyValue::PowerConj { h, kappa }, HomotopyValue::PowerConj { h: h2, .. }) = (&before.homotopy, &after.homotopy) {
                prop_assert!(p.equal_mod_power_conj(h2, &kappa.mul(&h.inverse()), kappa).unwrap().is_equal());
            }
        }
    }

    #[test]
    fn rotation_keeps_labels(seed in any::<u64>(), which in 0usize..4, flat in any::<bool>()) {
        let shape = if flat { flat_shapes() } else { classical_shapes() }[which].clone();
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &shape);
        let Some(ci) = (0..d.components().len()).find(|&i| d.component(i).is_closed()) else { return Ok(()) };
        let r = d.rotate_basepoint(ci).unwrap();
        let ids = d.crossings_in_walk_order();
        for v in &ids {
            for u in &ids {
                if flat {
                    prop_assert_eq!(flat_same_tribe(&d, v, u).unwrap(), flat_same_tribe(&r, v, u).unwrap());
                    prop_assert_eq!(flat_same_phratry(&d, v, u).unwrap(), flat_same_phratry(&r, v, u).unwrap());
                } else {
                    prop_assert_eq!(same_tribe(&d, v, u).unwrap(), same_tribe(&r, v, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn phratry_refines_tribe(seed in any::<u64>(), which in 0usize..4) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), &classical_shapes()[which]);
        let report = classify_report(&d).unwrap();
        for a in &report {
            for b in &report {
                if a.phratry == b.phratry {
                    prop_assert_eq!(a.tribe, b.tribe);
                }
            }
        }
    }
}
