//! Criterion benchmarks for tangle-core live in `benches/`.
