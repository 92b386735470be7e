//! Criterion benchmarks for `attainable-core`; see `benches/core.rs`.
