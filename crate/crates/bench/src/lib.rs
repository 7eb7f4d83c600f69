//! Criterion benchmarks for `quiverc-core`; see `benches/enumeration.rs`.
