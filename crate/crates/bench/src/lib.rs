//! Benchmark fixtures shared by the criterion targets.

use sisp_core::gen::RandomGraphConfig;
use sisp_core::Graph;

/// Seed used for every fixture, so runs compare like with like.
pub const SEED: u64 = 1;

/// Random digraph with `n` vertices and about `m` arcs, weights in `1..=10`.
pub fn sparse(n: usize, m: usize) -> Graph {
    RandomGraphConfig::with_expected_edges(n, m).generate(SEED)
}

/// Random digraph at edge density 0.4 with some zero-weight arcs.
pub fn dense(n: usize) -> Graph {
    RandomGraphConfig::zero_weight_variant(n).generate(SEED)
}
