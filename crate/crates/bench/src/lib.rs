//! Criterion benchmarks for `floorq`; see `benches/`.
