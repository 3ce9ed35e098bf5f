//! Criterion benchmarks for the `mould` crate; see `benches/`.
