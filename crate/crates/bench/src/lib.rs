//! Criterion benchmarks for the evaluator and the counting oracle live in `benches/`.
