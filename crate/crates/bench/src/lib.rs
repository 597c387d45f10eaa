//! Benchmark-only crate; see `benches/combinatorics.rs`.
