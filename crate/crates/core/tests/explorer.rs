use std::path::PathBuf;

use tangle_core::classify::{flat_labeling, is_self_dual};
use tangle_core::diagram::{parse_diagram, CrossingId, TangleDiagram};
use tangle_core::explore::{build_phratry_graph, compare_with_classifier, flat_sphere_diagrams, ExploreBudget};

fn fixture(name: &str) -> TangleDiagram {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    parse_diagram(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn id(s: &str) -> CrossingId {
    CrossingId::new(s)
}

fn names(v: &[CrossingId]) -> Vec<&str> {
    v.iter().map(|x| x.as_str()).collect()
}

#[test]
fn triangle_is_a_self_dual_tribe() {
    let d = fixture("triangle_flat.tdg");
    let g = build_phratry_graph(&d, &ExploreBudget::default());
    assert_eq!(g.components.len(), 1);
    assert_eq!(names(&g.components[0].members), ["u", "v", "w"]);
    assert!(g.components[0].self_dual);
    assert!(g.to_string().contains("self-dual tribe {u,v,w}"));
    for v in ["u", "v", "w"] {
        assert!(is_self_dual(&d, &id(v)).unwrap());
    }
    let r = compare_with_classifier(&d, &g).unwrap();
    assert_eq!(r.soundness_violations(), 0);
    assert_eq!(r.completeness_gaps(), 0);
}

#[test]
fn trefoil_is_one_component() {
    let d = fixture("sphere_trefoil.tdg");
    let g =
        build_phratry_graph(&d, &ExploreBudget { max_crossings: 6, max_word_len: 0, max_depth: 2, max_states: 20_000 });
    assert_eq!(g.components.len(), 1);
    assert_eq!(g.components[0].members.len(), 3);
    assert!(!g.components[0].self_dual);
    assert_eq!(compare_with_classifier(&d, &g).unwrap().soundness_violations(), 0);
}

#[test]
fn annulus_windings_stay_apart() {
    let d = fixture("annulus_two_windings.tdg");
    let g = build_phratry_graph(&d, &ExploreBudget::default());
    assert_eq!(g.components.len(), 2);
    let r = compare_with_classifier(&d, &g).unwrap();
    assert_eq!(r.soundness_violations(), 0);
    assert_eq!(r.completeness_gaps(), 0);
}

#[test]
fn fixtures_have_no_soundness_violations() {
    let names = [
        "annulus_knot.tdg",
        "annulus_two_windings.tdg",
        "sphere_trefoil.tdg",
        "triangle_flat.tdg",
        "torus_knot.tdg",
        "disk_long_knot.tdg",
        "sphere_hopf.tdg",
        "pants_knot.tdg",
        "genus2_flat.tdg",
    ];
    for f in names {
        for d in [fixture(f), fixture(f).flatten()] {
            let g = build_phratry_graph(&d, &ExploreBudget::default());
            let r = compare_with_classifier(&d, &g).unwrap();
            assert_eq!(r.soundness_violations(), 0, "{f}\n{r}");
        }
    }
}

#[test]
fn tiny_budget_reports_gaps_only() {
    let d = fixture("annulus_knot.tdg").flatten();
    let g = build_phratry_graph(&d, &ExploreBudget { max_crossings: 1, max_word_len: 0, max_depth: 0, max_states: 10 });
    assert!(g.incomplete);
    let r = compare_with_classifier(&d, &g).unwrap();
    assert_eq!(r.soundness_violations(), 0);
    assert!(r.completeness_gaps() > 0);
    assert!(r.to_string().contains("incomplete=yes"));
}

#[test]
fn small_sphere_diagrams_match_the_classifier() {
    for links in [false, true] {
        for d in flat_sphere_diagrams(2, links) {
            let budget = ExploreBudget {
                max_crossings: d.crossing_count() + 1,
                max_word_len: 0,
                max_depth: 64,
                max_states: 20_000,
            };
            let g = build_phratry_graph(&d, &budget);
            let r = compare_with_classifier(&d, &g).unwrap();
            assert_eq!((r.soundness_violations(), r.completeness_gaps()), (0, 0), "{d}\n{r}");
            let (lab, _) = flat_labeling(&d).unwrap();
            for (i, v) in lab.crossings.iter().enumerate() {
                for (j, w) in lab.crossings.iter().enumerate() {
                    let joined = g.component_of(v).unwrap().position(w).is_some();
                    assert_eq!(joined, lab.tribe[i] == lab.tribe[j]);
                }
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    let count = |n, links| {
        let mut c = vec![0; n + 1];
        for d in flat_sphere_diagrams(n, links) {
            c[d.crossing_count()] += 1;
        }
        c
    };
    assert_eq!(count(3, false), [1, 1, 3, 9]);
    assert_eq!(count(2, true)[..2], [1, 2]);
}

#[test]
fn search_is_deterministic_and_traceable() {
    let d = fixture("triangle_flat.tdg");
    let budget = ExploreBudget { max_depth: 2, ..ExploreBudget::default() };
    let a = build_phratry_graph(&d, &budget);
    let b = build_phratry_graph(&d, &budget);
    assert_eq!(a.to_string(), b.to_string());
    let last = a.states - 1;
    let trace = a.trace_to(&d, last).unwrap();
    assert!(!trace.is_empty() && trace.len() <= 2);
}
