//! Criterion benchmarks for asym-core; see benches/.
