//! Criterion benchmarks for `hgx-core`; see `benches/kernel.rs`.
