//! Criterion benchmarks for `kseg-core`. Run with `cargo bench -p kseg-bench`.
