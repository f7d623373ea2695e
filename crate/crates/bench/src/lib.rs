//! Criterion benchmarks for the core library live under `benches/`.
