use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tangle_core::explore::{build_phratry_graph, flat_sphere_diagrams, ExploreBudget};
use tangle_core::moves::{random_walk, WalkConfig};
use tangle_core::parse_diagram;

const TREFOIL: &str = include_str!("../../../fixtures/sphere_trefoil.tdg");
const TRIANGLE: &str = include_str!("../../../fixtures/triangle_flat.tdg");

fn walks(c: &mut Criterion) {
    let d = parse_diagram(TREFOIL).unwrap();
    c.bench_function("random_walk_trefoil_100", |b| {
        b.iter(|| random_walk(black_box(&d), 100, 3, &WalkConfig::default()).unwrap())
    });
}

fn exploration(c: &mut Criterion) {
    let d = parse_diagram(TRIANGLE).unwrap();
    c.bench_function("explore_triangle_default", |b| {
        b.iter(|| build_phratry_graph(black_box(&d), &ExploreBudget::default()))
    });
    c.bench_function("enumerate_sphere_3", |b| b.iter(|| flat_sphere_diagrams(black_box(3), true)));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = walks, exploration
}
criterion_main!(benches);
