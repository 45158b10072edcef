//! Ground-truth solvers.
//!
//! The brute-force enumerators are plain recursive DFS with a visited mask:
//! no priority queues and no code shared with the path-extension algorithms,
//! so a bug in one cannot hide in the other. [`Yen`] is the classic
//! deviation algorithm; it doubles as the k-SiSP solver behind the cycle
//! reductions.

use std::borrow::Cow;
use std::collections::{BTreeSet, HashSet};

use crate::error::{check_vertex, Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::{Cycle, SimplePath};
use crate::split::split_vertex;
use crate::sssp::shortest_path;
use crate::weight::{PathWeight, Weight};

/// Largest graph the exhaustive oracles accept by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 12;

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        Err(Error::OracleLimit {
            n: g.vertex_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

struct Dfs<'g> {
    g: &'g Graph,
    on_path: Vec<bool>,
    stack: Vec<VertexId>,
    wt: Weight,
}

impl<'g> Dfs<'g> {
    fn new(g: &'g Graph) -> Self {
        Dfs {
            g,
            on_path: vec![false; g.vertex_count()],
            stack: Vec::new(),
            wt: 0,
        }
    }

    fn current(&self) -> SimplePath {
        SimplePath {
            weight: PathWeight::new(self.wt, self.stack.len() as u32 - 1),
            vertices: self.stack.clone(),
        }
    }

    /// Calls `visit` on every simple path that starts with the current
    /// stack, including the current stack itself.
    fn walk(&mut self, u: VertexId, allowed: &dyn Fn(VertexId) -> bool, visit: &mut dyn FnMut(&Self, VertexId)) {
        self.on_path[u] = true;
        self.stack.push(u);
        visit(self, u);
        for &e in self.g.out_arcs(u) {
            let arc = *self.g.arc(e);
            if self.on_path[arc.head] || !allowed(arc.head) {
                continue;
            }
            self.wt += arc.weight;
            self.walk(arc.head, allowed, visit);
            self.wt -= arc.weight;
        }
        self.stack.pop();
        self.on_path[u] = false;
    }
}

/// Every simple `s -> t` path, sorted by `(wt, len, sequence)`, first `k` kept.
pub fn brute_paths(g: &Graph, s: VertexId, t: VertexId, k: usize) -> Result<Vec<SimplePath>> {
    brute_paths_with_limit(g, s, t, k, DEFAULT_ORACLE_LIMIT)
}

pub fn brute_paths_with_limit(g: &Graph, s: VertexId, t: VertexId, k: usize, limit: usize) -> Result<Vec<SimplePath>> {
    check_limit(g, limit)?;
    check_vertex(g.vertex_count(), s)?;
    check_vertex(g.vertex_count(), t)?;
    if s == t {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut dfs = Dfs::new(g);
    dfs.walk(s, &|v| v != s, &mut |d, u| {
        if u == t {
            out.push(d.current());
        }
    });
    out.sort();
    out.truncate(k);
    Ok(out)
}

/// Every simple path of at least one arc, over all pairs, sorted globally.
pub fn brute_all_paths(g: &Graph) -> Result<Vec<SimplePath>> {
    check_limit(g, DEFAULT_ORACLE_LIMIT)?;
    let mut out = Vec::new();
    let mut dfs = Dfs::new(g);
    for s in g.vertices() {
        dfs.walk(s, &|_| true, &mut |d, _| {
            if d.stack.len() > 1 {
                out.push(d.current());
            }
        });
    }
    out.sort();
    Ok(out)
}

/// Every simple cycle, optionally only those through `through`, sorted by
/// `(wt, len, canonical sequence)`, first `k` kept.
///
/// Directed cycles are found once each from their minimum vertex. Undirected
/// cycles need at least three vertices and are reported in canonical
/// direction only.
pub fn brute_cycles(g: &Graph, k: usize, through: Option<VertexId>) -> Result<Vec<Cycle>> {
    check_limit(g, DEFAULT_ORACLE_LIMIT)?;
    if let Some(z) = through {
        check_vertex(g.vertex_count(), z)?;
    }
    let directed = g.is_directed();
    let mut out = Vec::new();
    let mut dfs = Dfs::new(g);
    for root in g.vertices() {
        dfs.walk(root, &|v| v > root, &mut |d, u| {
            let Some(back) = d.g.find_arc(u, root) else {
                return;
            };
            let len = d.stack.len();
            if len < 2 || (!directed && (len < 3 || d.stack[1] > d.stack[len - 1])) {
                return;
            }
            let w = d.g.arc(back).weight;
            out.push(Cycle {
                weight: PathWeight::new(d.wt + w, len as u32),
                vertices: d.stack.clone(),
            });
        });
    }
    if let Some(z) = through {
        out.retain(|c| c.contains(z));
    }
    out.sort();
    out.truncate(k);
    Ok(out)
}

/// Yen's k shortest simple paths, produced lazily in `(wt, len, sequence)` order.
pub struct Yen<'g> {
    g: Cow<'g, Graph>,
    source: VertexId,
    target: VertexId,
    accepted: Vec<SimplePath>,
    candidates: BTreeSet<SimplePath>,
    started: bool,
}

impl<'g> Yen<'g> {
    pub fn new(g: &'g Graph, source: VertexId, target: VertexId) -> Result<Self> {
        check_vertex(g.vertex_count(), source)?;
        check_vertex(g.vertex_count(), target)?;
        Ok(Yen {
            g: Cow::Borrowed(g),
            source,
            target,
            accepted: Vec::new(),
            candidates: BTreeSet::new(),
            started: false,
        })
    }

    /// A cursor that owns its graph, for callers that keep it alive
    /// alongside the graph it was built from.
    pub fn owned(g: Graph, source: VertexId, target: VertexId) -> Result<Yen<'static>> {
        check_vertex(g.vertex_count(), source)?;
        check_vertex(g.vertex_count(), target)?;
        Ok(Yen {
            g: Cow::Owned(g),
            source,
            target,
            accepted: Vec::new(),
            candidates: BTreeSet::new(),
            started: false,
        })
    }

    /// Paths produced so far.
    pub fn accepted(&self) -> &[SimplePath] {
        &self.accepted
    }

    fn spur_candidates(&mut self) {
        let g: &Graph = &self.g;
        let prev = self.accepted.last().expect("called after a path was accepted").clone();
        let mut root_wt: Weight = 0;
        let mut banned_vertex = vec![false; g.vertex_count()];
        for i in 0..prev.vertices.len() - 1 {
            let spur = prev.vertices[i];
            let root = &prev.vertices[..=i];
            let banned_arcs: HashSet<EdgeId> = self
                .accepted
                .iter()
                .filter(|p| p.vertices.len() > i + 1 && &p.vertices[..=i] == root)
                .filter_map(|p| g.find_arc(p.vertices[i], p.vertices[i + 1]))
                .collect();
            let allow = |e: EdgeId| {
                let a = g.arc(e);
                !banned_arcs.contains(&e) && !banned_vertex[a.tail] && !banned_vertex[a.head]
            };
            if let Some(tail) = shortest_path(g, spur, self.target, allow) {
                let mut vertices = root[..i].to_vec();
                vertices.extend_from_slice(&tail.vertices);
                self.candidates.insert(SimplePath {
                    weight: PathWeight::new(root_wt + tail.weight.wt, i as u32 + tail.weight.len),
                    vertices,
                });
            }
            banned_vertex[spur] = true;
            root_wt += g.arc(g.find_arc(spur, prev.vertices[i + 1]).expect("path arc")).weight;
        }
    }
}

impl Iterator for Yen<'_> {
    type Item = SimplePath;

    fn next(&mut self) -> Option<SimplePath> {
        if !self.started {
            self.started = true;
            if self.source == self.target {
                return None;
            }
            let first = shortest_path(&self.g, self.source, self.target, |_| true)?;
            self.accepted.push(first.clone());
            return Some(first);
        }
        if self.accepted.is_empty() {
            return None;
        }
        self.spur_candidates();
        let next = self.candidates.pop_first()?;
        self.accepted.push(next.clone());
        Some(next)
    }
}

/// The `k` simple shortest `s -> t` paths.
pub fn yen(g: &Graph, s: VertexId, t: VertexId, k: usize) -> Result<Vec<SimplePath>> {
    Ok(Yen::new(g, s, t)?.take(k).collect())
}

/// Minimum-weight simple cycle: exhaustive for small graphs, otherwise one
/// split-vertex search per vertex.
pub fn min_weight_cycle(g: &Graph) -> Option<Cycle> {
    if g.vertex_count() <= DEFAULT_ORACLE_LIMIT || !g.is_directed() {
        min_weight_cycle_brute(g)
    } else {
        min_weight_cycle_split(g)
    }
}

pub fn min_weight_cycle_brute(g: &Graph) -> Option<Cycle> {
    brute_cycles(g, 1, None).ok()?.into_iter().next()
}

/// Directed graphs only: shortest `z_o -> z_i` path in `G'_z` for every `z`.
pub fn min_weight_cycle_split(g: &Graph) -> Option<Cycle> {
    g.vertices()
        .filter_map(|z| {
            let split = split_vertex(g, z).ok()?;
            let p = shortest_path(&split.graph, split.out_vertex, split.in_vertex, |_| true)?;
            Some(Cycle::new(p.weight, split.path_to_cycle(&p.vertices), true))
        })
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::testgraphs::*;

    fn wts(paths: &[SimplePath]) -> Vec<Weight> {
        paths.iter().map(|p| p.weight.wt).collect()
    }

    fn cwts(cycles: &[Cycle]) -> Vec<Weight> {
        cycles.iter().map(|c| c.weight.wt).collect()
    }

    #[test]
    fn brute_paths_share() {
        let p = brute_paths(&g_share(), 0, 3, 3).unwrap();
        assert_eq!(wts(&p), vec![2, 3, 10]);
        assert_eq!(p[1].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn brute_paths_degenerate() {
        assert!(brute_paths(&g_tri(), 0, 0, 5).unwrap().is_empty());
        assert!(brute_paths(&g_dag(), 3, 0, 5).unwrap().is_empty());
    }

    #[test]
    fn brute_paths_refuses_large_graphs() {
        let g = Graph::directed(13, []).unwrap();
        assert_eq!(
            brute_paths(&g, 0, 1, 1).unwrap_err(),
            Error::OracleLimit { n: 13, limit: 12 }
        );
    }

    #[test]
    fn brute_all_paths_triangle() {
        let all = brute_all_paths(&g_tri()).unwrap();
        assert_eq!(wts(&all), vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn brute_cycles_cyc2() {
        let g = g_cyc2();
        assert_eq!(cwts(&brute_cycles(&g, 2, None).unwrap()), vec![2, 5]);
        assert_eq!(cwts(&brute_cycles(&g, 2, Some(0)).unwrap()), vec![5]);
        assert!(brute_cycles(&g_dag(), 5, None).unwrap().is_empty());
    }

    #[test]
    fn brute_cycles_undirected() {
        let tri = Graph::undirected(3, [Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(0, 2, 1)]).unwrap();
        let c = brute_cycles(&tri, 5, None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].vertices, vec![0, 1, 2]);
        let path = Graph::undirected(3, [Edge::new(0, 1, 1), Edge::new(1, 2, 1)]).unwrap();
        assert!(brute_cycles(&path, 5, None).unwrap().is_empty());
    }

    #[test]
    fn yen_matches_examples() {
        assert_eq!(wts(&yen(&g_share(), 0, 3, 3).unwrap()), vec![2, 3, 10]);
        assert_eq!(wts(&yen(&g_diamond(), 0, 3, 2).unwrap()), vec![2, 3]);
        assert_eq!(yen(&g_diamond(), 0, 3, 10).unwrap().len(), 3);
        assert!(yen(&g_dag(), 3, 0, 2).unwrap().is_empty());
    }

    #[test]
    fn min_cycle_examples() {
        assert_eq!(min_weight_cycle(&g_tri()).map(|c| c.weight.wt), Some(3));
        assert_eq!(min_weight_cycle(&g_cyc2()).map(|c| c.weight.wt), Some(2));
        assert_eq!(min_weight_cycle(&g_dag()), None);
        assert_eq!(min_weight_cycle_split(&g_cyc2()).map(|c| c.vertices), Some(vec![1, 2]));
    }
}
