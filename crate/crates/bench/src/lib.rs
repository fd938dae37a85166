//! Criterion benchmarks for `latdom`; see `benches/`.
