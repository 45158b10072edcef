//! Dijkstra over [`PathWeight`] keys.
//!
//! Among paths of equal `(wt, len)` the tree keeps the one whose vertex
//! sequence is lexicographically smallest. Shortest paths chosen this way are
//! closed under prefixes, so they still form a tree, and every path the crate
//! reports is the minimum of the total order `(wt, len, vertex sequence)`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::SimplePath;
use crate::weight::PathWeight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathTree {
    source: VertexId,
    parent: Vec<Option<EdgeId>>,
    dist: Vec<Option<PathWeight>>,
}

impl ShortestPathTree {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    /// `None` for unreachable vertices.
    #[inline]
    pub fn dist(&self, v: VertexId) -> Option<PathWeight> {
        self.dist[v]
    }

    /// Tree arc entering `v`; `None` for the source and unreachable vertices.
    #[inline]
    pub fn parent_arc(&self, v: VertexId) -> Option<EdgeId> {
        self.parent[v]
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.dist[v].is_some()
    }

    /// Arcs of the tree path from the source to `v`, in order.
    pub fn arcs_to(&self, g: &Graph, v: VertexId) -> Option<Vec<EdgeId>> {
        self.dist[v]?;
        let mut arcs = Vec::new();
        let mut cur = v;
        while let Some(e) = self.parent[cur] {
            arcs.push(e);
            cur = g.arc(e).tail;
        }
        arcs.reverse();
        Some(arcs)
    }

    /// Vertex sequence of the tree path from the source to `v`.
    pub fn path_to(&self, g: &Graph, v: VertexId) -> Option<Vec<VertexId>> {
        self.dist[v]?;
        let mut seq = vec![v];
        let mut cur = v;
        while let Some(e) = self.parent[cur] {
            cur = g.arc(e).tail;
            seq.push(cur);
        }
        seq.reverse();
        Some(seq)
    }

    /// First arc on the tree path to `v` (the child of the root it hangs under).
    pub fn first_arc(&self, g: &Graph, v: VertexId) -> Option<EdgeId> {
        let mut cur = v;
        let mut first = None;
        while let Some(e) = self.parent[cur] {
            first = Some(e);
            cur = g.arc(e).tail;
        }
        first
    }

    /// Children lists of the tree, each sorted by vertex id.
    pub fn children(&self, g: &Graph) -> Vec<Vec<VertexId>> {
        let mut ch = vec![Vec::new(); self.dist.len()];
        for v in 0..self.dist.len() {
            if let Some(e) = self.parent[v] {
                ch[g.arc(e).tail].push(v);
            }
        }
        ch
    }
}

/// Single-source shortest paths from `s`.
pub fn sssp(g: &Graph, s: VertexId) -> ShortestPathTree {
    sssp_filtered(g, s, |_| true)
}

/// Single-source shortest paths from `s` using only arcs accepted by `allow`.
///
/// Equivalent to running [`sssp`] on the subgraph of allowed arcs, without
/// building it.
pub fn sssp_filtered(g: &Graph, s: VertexId, allow: impl Fn(EdgeId) -> bool) -> ShortestPathTree {
    search(g, s, None, allow)
}

/// Shortest `s -> t` path over arcs accepted by `allow`, stopping as soon as
/// `t` is settled.
pub fn shortest_path(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    allow: impl Fn(EdgeId) -> bool,
) -> Option<SimplePath> {
    let tree = search(g, s, Some(t), allow);
    Some(SimplePath {
        weight: tree.dist(t)?,
        vertices: tree.path_to(g, t)?,
    })
}

fn search(g: &Graph, s: VertexId, target: Option<VertexId>, allow: impl Fn(EdgeId) -> bool) -> ShortestPathTree {
    let n = g.vertex_count();
    let mut dist: Vec<Option<PathWeight>> = vec![None; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[s] = Some(PathWeight::ZERO);
    heap.push(Reverse((PathWeight::ZERO, s)));

    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        if target == Some(u) {
            break;
        }
        for &e in g.out_arcs(u) {
            if !allow(e) {
                continue;
            }
            let arc = g.arc(e);
            let v = arc.head;
            if done[v] {
                continue;
            }
            let cand = d.extend(arc.weight);
            match dist[v].map(|cur| cand.cmp(&cur)) {
                None | Some(Ordering::Less) => {
                    dist[v] = Some(cand);
                    parent[v] = Some(e);
                    heap.push(Reverse((cand, v)));
                }
                Some(Ordering::Equal) => {
                    // both tails are settled; their paths are final
                    let other = g.arc(parent[v].expect("reached vertex has a parent")).tail;
                    if cmp_tree_paths(g, &parent, u, other) == Ordering::Less {
                        parent[v] = Some(e);
                    }
                }
                Some(Ordering::Greater) => {}
            }
        }
    }

    ShortestPathTree { source: s, parent, dist }
}

/// Lexicographic comparison of the tree paths to `a` and `b`, which have
/// the same number of edges.
fn cmp_tree_paths(g: &Graph, parent: &[Option<EdgeId>], a: VertexId, b: VertexId) -> Ordering {
    let walk = |mut v: VertexId| {
        let mut seq = vec![v];
        while let Some(e) = parent[v] {
            v = g.arc(e).tail;
            seq.push(v);
        }
        seq.reverse();
        seq
    };
    walk(a).cmp(&walk(b))
}
