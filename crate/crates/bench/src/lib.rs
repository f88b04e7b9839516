//! Criterion benchmarks for the superjet kernels; see `benches/`.
