//! Benchmarks for hecke-core live in `benches/`; run them with `cargo bench -p hecke-bench`.
