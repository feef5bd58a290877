//! Benchmarks for the tancone oracle; see `benches/`.
