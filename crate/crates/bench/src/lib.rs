//! Criterion benchmarks for `cgt-core`; see `benches/`.
