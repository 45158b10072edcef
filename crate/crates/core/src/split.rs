//! Vertex-splitting transforms that turn cycle questions into path questions.

use crate::error::{check_vertex, Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// `G'_z`: vertex `z` split into an out-copy and an in-copy.
#[derive(Debug, Clone)]
pub struct SplitVertex {
    pub graph: Graph,
    /// Emits every former out-arc of `z`. Keeps the id `z`.
    pub out_vertex: VertexId,
    /// Receives every former in-arc of `z`. New id `n`.
    pub in_vertex: VertexId,
}

impl SplitVertex {
    /// Maps a path `z_o -> ... -> z_i` back to the cycle it encodes,
    /// starting at `z` (the closing arc back to `z` is implicit).
    pub fn path_to_cycle(&self, path: &[VertexId]) -> Vec<VertexId> {
        debug_assert_eq!(path.first(), Some(&self.out_vertex));
        debug_assert_eq!(path.last(), Some(&self.in_vertex));
        path[..path.len() - 1].to_vec()
    }
}

/// Replaces `z` by `z_o` (id `z`) and `z_i` (id `n`). Simple `z_o -> z_i`
/// paths correspond one-to-one, with equal weight, to simple cycles through `z`.
pub fn split_vertex(g: &Graph, z: VertexId) -> Result<SplitVertex> {
    if !g.is_directed() {
        return Err(Error::UndirectedInput);
    }
    check_vertex(g.vertex_count(), z)?;
    let n = g.vertex_count();
    let arcs = g.arcs().iter().map(|e| {
        if e.head == z {
            Edge::new(e.tail, n, e.weight)
        } else {
            *e
        }
    });
    Ok(SplitVertex {
        graph: Graph::directed(n + 1, arcs)?,
        out_vertex: z,
        in_vertex: n,
    })
}

/// `G'`: every vertex `x` split into `x_i = 2x` and `x_o = 2x + 1`, joined by
/// a zero-weight arc `x_i -> x_o`; each arc `(u, v)` becomes `(u_o, v_i)`.
///
/// The interleaved numbering is monotone in the original ids, so
/// lexicographic order on split sequences agrees with order on the originals.
#[derive(Debug, Clone)]
pub struct SplitAll {
    pub graph: Graph,
    original_n: usize,
}

impl SplitAll {
    #[inline]
    pub fn in_vertex(&self, x: VertexId) -> VertexId {
        2 * x
    }

    #[inline]
    pub fn out_vertex(&self, x: VertexId) -> VertexId {
        2 * x + 1
    }

    /// Original vertex behind a split vertex.
    #[inline]
    pub fn original(&self, v: VertexId) -> VertexId {
        v / 2
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_n
    }

    /// Collapses a split-graph path to original vertices, merging each
    /// `x_i, x_o` pair.
    pub fn collapse(&self, path: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = Vec::with_capacity(path.len() / 2 + 1);
        for &v in path {
            let x = self.original(v);
            if out.last() != Some(&x) {
                out.push(x);
            }
        }
        out
    }

    /// Subgraph induced on `{x_i, x_o : x >= j}`.
    pub fn induced_from(&self, j: VertexId) -> Graph {
        let lo = 2 * j;
        self.graph.filter_arcs(|e| e.tail >= lo && e.head >= lo)
    }
}

pub fn split_all(g: &Graph) -> Result<SplitAll> {
    if !g.is_directed() {
        return Err(Error::UndirectedInput);
    }
    let n = g.vertex_count();
    let zero = (0..n).map(|x| Edge::new(2 * x, 2 * x + 1, 0));
    let moved = g.arcs().iter().map(|e| Edge::new(2 * e.tail + 1, 2 * e.head, e.weight));
    Ok(SplitAll {
        graph: Graph::directed(2 * n, zero.chain(moved))?,
        original_n: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sssp::sssp;
    use crate::testgraphs::*;
    use crate::weight::PathWeight;

    #[test]
    fn split_triangle_at_1() {
        let g = g_tri();
        let s = split_vertex(&g, 0).unwrap();
        assert_eq!(s.graph.vertex_count(), 4);
        assert!(s.graph.find_arc(0, 1).is_some());
        assert!(s.graph.find_arc(1, 2).is_some());
        assert!(s.graph.find_arc(2, 3).is_some());
        assert!(s.graph.find_arc(2, 0).is_none());
        let t = sssp(&s.graph, s.out_vertex);
        assert_eq!(t.dist(s.in_vertex).map(|d| d.wt), Some(3));
        let path = t.path_to(&s.graph, s.in_vertex).unwrap();
        assert_eq!(s.path_to_cycle(&path), vec![0, 1, 2]);
    }

    #[test]
    fn split_single_edge_has_no_cycle_path() {
        let s = split_vertex(&g_edge(1), 0).unwrap();
        assert_eq!(s.graph.arc_count(), 1);
        assert!(!sssp(&s.graph, s.out_vertex).is_reachable(s.in_vertex));
    }

    #[test]
    fn split_all_triangle() {
        let s = split_all(&g_tri()).unwrap();
        assert_eq!(s.graph.vertex_count(), 6);
        let zero = s.graph.arcs().iter().filter(|e| e.weight == 0).count();
        assert_eq!((zero, s.graph.arc_count()), (3, 6));
        let t = sssp(&s.graph, s.out_vertex(0));
        assert_eq!(t.dist(s.in_vertex(0)), Some(PathWeight::new(3, 5)));
        let p = t.path_to(&s.graph, s.in_vertex(0)).unwrap();
        assert_eq!(s.collapse(&p), vec![0, 1, 2, 0]);
    }

    #[test]
    fn split_all_edgeless() {
        let g = Graph::directed(2, []).unwrap();
        let s = split_all(&g).unwrap();
        assert_eq!(s.graph.arc_count(), 2);
        assert!(s.graph.arcs().iter().all(|e| e.weight == 0));
    }

    #[test]
    fn undirected_is_rejected() {
        let g = Graph::undirected(2, [Edge::new(0, 1, 1)]).unwrap();
        assert_eq!(split_vertex(&g, 0).unwrap_err(), Error::UndirectedInput);
        assert!(split_all(&g).is_err());
    }
}
