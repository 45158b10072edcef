//! k simple shortest cycles through a vertex.
//!
//! Directed: a cycle through `z` is a `z_o -> z_i` path in the graph with
//! `z` split in two. Undirected: `x` is split into `x0` and `x1`, and each
//! neighbour is wired to one side by one bit of its id. Two neighbours of
//! `x` differ in some bit, so every cycle through `x` shows up as a path in
//! at least one of the `ceil(log2 n)` bit graphs.

use crate::apsisp::two_apsisp;
use crate::error::{check_vertex, Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::oracles::Yen;
use crate::path::{Cycle, SimplePath};
use crate::split::{split_all, split_vertex};
use crate::weight::PathWeight;

/// Up to `k` cycles through `anchor`, ascending in canonical cycle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    pub anchor: VertexId,
    pub cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn weights(&self) -> Vec<PathWeight> {
        self.cycles.iter().map(|c| c.weight).collect()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// The first `k` paths of `it` plus any that tie the k-th on `(wt, len)`.
/// Path order inside a tie depends on vertex labels of the auxiliary graph,
/// so the caller re-sorts canonically before truncating.
fn take_through_ties(it: impl Iterator<Item = SimplePath>, k: usize) -> Vec<SimplePath> {
    let mut out: Vec<SimplePath> = Vec::new();
    for p in it {
        if out.len() >= k && out.last().is_some_and(|last| p.weight > last.weight) {
            break;
        }
        out.push(p);
    }
    out
}

fn finish(anchor: VertexId, mut cycles: Vec<Cycle>, k: usize) -> CycleSet {
    cycles.sort();
    cycles.dedup();
    cycles.truncate(k);
    CycleSet { anchor, cycles }
}

/// k shortest simple cycles through `z` in a directed graph.
pub fn k_sisc(g: &Graph, z: VertexId, k: usize) -> Result<CycleSet> {
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let split = split_vertex(g, z)?;
    let paths = take_through_ties(Yen::new(&split.graph, split.out_vertex, split.in_vertex)?, k);
    let cycles = paths
        .into_iter()
        .map(|p| Cycle::new(p.weight, split.path_to_cycle(&p.vertices), true))
        .collect();
    Ok(finish(z, cycles, k))
}

/// k shortest simple cycles through every vertex of a directed graph.
///
/// `k = 2` reads each vertex's pair off one 2-APSiSP run on the fully split
/// graph. Within a weight tie the pair may differ from [`k_sisc`], since the
/// table keeps ties in split-graph order.
pub fn k_avsisc(g: &Graph, k: usize) -> Result<Vec<CycleSet>> {
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if k != 2 {
        return g.vertices().map(|x| k_sisc(g, x, k)).collect();
    }
    let split = split_all(g)?;
    let table = two_apsisp(&split.graph);
    Ok(g
        .vertices()
        .map(|x| {
            let cycles = table
                .paths(split.out_vertex(x), split.in_vertex(x))
                .into_iter()
                .map(|p| {
                    let mut cyc = split.collapse(&p.vertices);
                    cyc.pop();
                    let len = cyc.len() as u32;
                    Cycle::new(PathWeight::new(p.weight.wt, len), cyc, true)
                })
                .collect();
            finish(x, cycles, 2)
        })
        .collect())
}

/// Number of bit graphs used by [`undirected_k_sisc`].
pub fn bit_graph_count(n: usize) -> usize {
    (usize::BITS - n.saturating_sub(1).leading_zeros()).max(1) as usize
}

/// Directed graph for bit `i`: `x0` keeps id `x`, `x1` gets id `n`.
/// Neighbours with bit `i` clear are entered from `x0`; those with it set
/// lead into `x1`.
fn bit_graph(g: &Graph, x: VertexId, i: usize) -> Graph {
    let n = g.vertex_count();
    let x1 = n;
    let arcs = g.arcs().iter().filter_map(|e| {
        if e.tail == x {
            (e.head >> i & 1 == 0).then_some(*e)
        } else if e.head == x {
            (e.tail >> i & 1 == 1).then(|| Edge::new(e.tail, x1, e.weight))
        } else {
            Some(*e)
        }
    });
    Graph::directed(n + 1, arcs).expect("arcs of a simple graph")
}

/// k shortest simple cycles (at least three vertices) through `x` in an
/// undirected graph.
pub fn undirected_k_sisc(g: &Graph, x: VertexId, k: usize) -> Result<CycleSet> {
    if g.is_directed() {
        return Err(Error::DirectedInput);
    }
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let n = g.vertex_count();
    check_vertex(n, x)?;
    let mut cycles = Vec::new();
    for i in 0..bit_graph_count(n) {
        let h = bit_graph(g, x, i);
        for p in take_through_ties(Yen::new(&h, x, n)?, k) {
            let cyc = p.vertices[..p.vertices.len() - 1].to_vec();
            cycles.push(Cycle::new(p.weight, cyc, false));
        }
    }
    Ok(finish(x, cycles, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::RandomGraphConfig;
    use crate::oracles::brute_cycles;
    use crate::testgraphs::*;
    use crate::weight::Weight;

    fn wts(s: &CycleSet) -> Vec<Weight> {
        s.cycles.iter().map(|c| c.weight.wt).collect()
    }

    fn undirected(n: usize, edges: &[(usize, usize, Weight)]) -> Graph {
        Graph::undirected(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w))).unwrap()
    }

    #[test]
    fn directed_examples() {
        assert_eq!(wts(&k_sisc(&g_cyc2(), 1, 2).unwrap()), vec![2, 5]);
        assert_eq!(wts(&k_sisc(&g_tri(), 0, 3).unwrap()), vec![3]);
        assert!(k_sisc(&g_dag(), 1, 4).unwrap().is_empty());
    }

    #[test]
    fn all_vertices_examples() {
        let sets = k_avsisc(&g_cyc2(), 2).unwrap();
        assert_eq!(sets.iter().map(wts).collect::<Vec<_>>(), vec![vec![5], vec![2, 5], vec![2]]);
        for s in k_avsisc(&g_tri(), 2).unwrap() {
            assert_eq!(wts(&s), vec![3]);
        }
        let empty = Graph::directed(4, []).unwrap();
        assert!(k_avsisc(&empty, 3).unwrap().iter().all(CycleSet::is_empty));
    }

    #[test]
    fn undirected_examples() {
        let tri = undirected(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        assert_eq!(wts(&undirected_k_sisc(&tri, 0, 1).unwrap()), vec![3]);
        let path = undirected(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        assert!(undirected_k_sisc(&path, 1, 3).unwrap().is_empty());
        let square = undirected(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        let s = undirected_k_sisc(&square, 0, 2).unwrap();
        assert_eq!(wts(&s), vec![4]);
        assert_eq!(s.cycles[0].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn direction_errors() {
        assert_eq!(undirected_k_sisc(&g_tri(), 0, 1).unwrap_err(), Error::DirectedInput);
        let tri = undirected(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        assert_eq!(k_sisc(&tri, 0, 1).unwrap_err(), Error::UndirectedInput);
        assert_eq!(k_avsisc(&tri, 2).unwrap_err(), Error::UndirectedInput);
    }

    #[test]
    fn bit_counts() {
        assert_eq!(bit_graph_count(1), 1);
        assert_eq!(bit_graph_count(2), 1);
        assert_eq!(bit_graph_count(3), 2);
        assert_eq!(bit_graph_count(4), 2);
        assert_eq!(bit_graph_count(5), 3);
        assert_eq!(bit_graph_count(8), 3);
        assert_eq!(bit_graph_count(9), 4);
    }

    #[test]
    fn directed_matches_brute_force() {
        for seed in 0..40 {
            let g = RandomGraphConfig::zero_weight_variant(6).generate(seed);
            for z in g.vertices() {
                for k in 1..=4 {
                    let want = brute_cycles(&g, k, Some(z)).unwrap();
                    assert_eq!(k_sisc(&g, z, k).unwrap().cycles, want, "seed {seed} z {z} k {k}");
                }
            }
        }
    }

    #[test]
    fn two_all_vertices_agrees_with_per_vertex() {
        for seed in 0..40 {
            let g = RandomGraphConfig::standard(6).generate(seed);
            for (x, s) in k_avsisc(&g, 2).unwrap().into_iter().enumerate() {
                assert_eq!(s.weights(), k_sisc(&g, x, 2).unwrap().weights(), "seed {seed} x {x}");
                assert!(s.cycles.iter().all(|c| c.contains(x)));
            }
        }
    }

    #[test]
    fn undirected_matches_brute_force() {
        for seed in 0..40 {
            let cfg = RandomGraphConfig {
                edge_prob: 0.5,
                ..RandomGraphConfig::zero_weight_variant(7)
            };
            let g = cfg.undirected().generate(seed);
            for x in g.vertices() {
                for k in [1, 2, 4] {
                    let want = brute_cycles(&g, k, Some(x)).unwrap();
                    assert_eq!(undirected_k_sisc(&g, x, k).unwrap().cycles, want, "seed {seed} x {x} k {k}");
                }
            }
        }
    }
}
