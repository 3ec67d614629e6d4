//! Benchmarks for the sliding suffix tree live under `benches/`.
