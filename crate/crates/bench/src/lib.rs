//! Benchmark-only crate; see `benches/domination.rs`.
