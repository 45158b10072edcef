//! Seeded random graphs for verification runs and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph};
use crate::weight::Weight;

/// Erdős-Rényi style generator with integer weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomGraphConfig {
    pub n: usize,
    pub edge_prob: f64,
    pub min_weight: Weight,
    pub max_weight: Weight,
    /// Probability that an edge gets weight 0 instead of a uniform draw.
    pub zero_prob: f64,
    pub directed: bool,
}

impl RandomGraphConfig {
    /// `p = 0.4`, weights uniform in `1..=10`.
    pub fn standard(n: usize) -> Self {
        RandomGraphConfig {
            n,
            edge_prob: 0.4,
            min_weight: 1,
            max_weight: 10,
            zero_prob: 0.0,
            directed: true,
        }
    }

    /// Like [`standard`](Self::standard), with each edge weight 0 w.p. 0.2.
    pub fn zero_weight_variant(n: usize) -> Self {
        RandomGraphConfig {
            zero_prob: 0.2,
            ..Self::standard(n)
        }
    }

    pub fn undirected(self) -> Self {
        RandomGraphConfig {
            directed: false,
            ..self
        }
    }

    /// Edge probability giving about `m` arcs in expectation.
    pub fn with_expected_edges(n: usize, m: usize) -> Self {
        let pairs = (n * n.saturating_sub(1)).max(1) as f64;
        RandomGraphConfig {
            edge_prob: (m as f64 / pairs).min(1.0),
            ..Self::standard(n)
        }
    }

    pub fn generate(&self, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..self.n {
            let heads = if self.directed { 0..self.n } else { u + 1..self.n };
            for v in heads {
                if u == v || !rng.random_bool(self.edge_prob) {
                    continue;
                }
                let w = if self.zero_prob > 0.0 && rng.random_bool(self.zero_prob) {
                    0
                } else {
                    rng.random_range(self.min_weight..=self.max_weight)
                };
                edges.push(Edge::new(u, v, w));
            }
        }
        let g = if self.directed {
            Graph::directed(self.n, edges)
        } else {
            Graph::undirected(self.n, edges)
        };
        g.expect("generator emits simple graphs")
    }
}

/// Complete digraph on `n` vertices with seeded weights in `1..=max_weight`.
pub fn complete_digraph(n: usize, max_weight: Weight, seed: u64) -> Graph {
    RandomGraphConfig {
        edge_prob: 1.0,
        max_weight,
        ..RandomGraphConfig::standard(n)
    }
    .generate(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_graph() {
        let cfg = RandomGraphConfig::zero_weight_variant(7);
        assert_eq!(cfg.generate(42), cfg.generate(42));
        assert_ne!(cfg.generate(42), cfg.generate(43));
    }

    #[test]
    fn weights_in_range() {
        let g = RandomGraphConfig::standard(8).generate(1);
        assert!(g.arcs().iter().all(|e| (1..=10).contains(&e.weight)));
        let g = RandomGraphConfig::zero_weight_variant(8).generate(1);
        assert!(g.arcs().iter().all(|e| e.weight <= 10));
    }

    #[test]
    fn complete_has_all_arcs() {
        assert_eq!(complete_digraph(5, 3, 0).arc_count(), 20);
    }

    #[test]
    fn expected_edge_count_is_close() {
        let g = RandomGraphConfig::with_expected_edges(300, 1800).generate(7);
        assert!((1500..2100).contains(&g.arc_count()), "{}", g.arc_count());
    }
}
