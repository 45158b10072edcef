//! Small named graphs used throughout the docs and tests. Vertex `k` in the
//! comments is id `k - 1` here.

use crate::graph::Graph;

/// Directed triangle 1->2->3->1, unit weights.
pub fn g_tri() -> Graph {
    Graph::from_triples(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
}

/// 1->2 (1), 2->4 (1), 1->3 (2), 3->4 (1), 2->3 (1).
pub fn g_diamond() -> Graph {
    Graph::from_triples(4, &[(0, 1, 1), (1, 3, 1), (0, 2, 2), (2, 3, 1), (1, 2, 1)]).unwrap()
}

/// 1->2 (1), 2->4 (1), 2->3 (1), 3->4 (1), 1->4 (10).
pub fn g_share() -> Graph {
    Graph::from_triples(4, &[(0, 1, 1), (1, 3, 1), (1, 2, 1), (2, 3, 1), (0, 3, 10)]).unwrap()
}

/// 1->2 (2), 2->1 (3), 2->3 (1), 3->2 (1).
pub fn g_cyc2() -> Graph {
    Graph::from_triples(3, &[(0, 1, 2), (1, 0, 3), (1, 2, 1), (2, 1, 1)]).unwrap()
}

/// Single edge 1->2 of weight `w`.
pub fn g_edge(w: u64) -> Graph {
    Graph::from_triples(2, &[(0, 1, w)]).unwrap()
}

/// A small DAG: 1->2, 1->3, 2->3, 3->4.
pub fn g_dag() -> Graph {
    Graph::from_triples(4, &[(0, 1, 1), (0, 2, 2), (1, 2, 1), (2, 3, 1)]).unwrap()
}
