//! Benchmark-only crate; see `benches/csm.rs`.
