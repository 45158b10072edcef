//! Shortest paths from a source with one tree arc excluded at a time.
//!
//! The reference implementation reruns the search once per excluded arc on
//! `G - {e}`. Excluding a set of independent arcs (arcs whose head subtrees
//! are disjoint) is the input shape an `O(m + n log n)` batch algorithm
//! needs; the contract here is only its input/output behaviour.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::sssp::{sssp_filtered, ShortestPathTree};
use crate::weight::PathWeight;

/// Tree arcs whose head subtrees are pairwise vertex-disjoint.
#[derive(Debug, Clone)]
pub struct IndependentEdgeSet<'t> {
    tree: &'t ShortestPathTree,
    arcs: Vec<EdgeId>,
}

impl<'t> IndependentEdgeSet<'t> {
    pub fn new(g: &Graph, tree: &'t ShortestPathTree, arcs: Vec<EdgeId>) -> Result<Self> {
        if check_independent(g, tree, &arcs)? {
            Ok(IndependentEdgeSet { tree, arcs })
        } else {
            Err(Error::NotIndependent)
        }
    }

    /// The tree arcs leaving the root. Sibling subtrees never overlap.
    pub fn root_arcs(g: &Graph, tree: &'t ShortestPathTree) -> Self {
        let root = tree.source();
        let arcs = g
            .out_arcs(root)
            .iter()
            .copied()
            .filter(|&e| tree.parent_arc(g.arc(e).head) == Some(e))
            .collect();
        IndependentEdgeSet { tree, arcs }
    }

    pub fn tree(&self) -> &ShortestPathTree {
        self.tree
    }

    pub fn arcs(&self) -> &[EdgeId] {
        &self.arcs
    }
}

/// Whether the subtrees below the heads of `arcs` are pairwise disjoint.
pub fn check_independent(g: &Graph, tree: &ShortestPathTree, arcs: &[EdgeId]) -> Result<bool> {
    for &e in arcs {
        if e >= g.arc_count() || tree.parent_arc(g.arc(e).head) != Some(e) {
            return Err(Error::EdgeNotInTree(e));
        }
    }
    let children = tree.children(g);
    let mut owner: Vec<Option<usize>> = vec![None; tree.vertex_count()];
    for (i, &e) in arcs.iter().enumerate() {
        let mut stack = vec![g.arc(e).head];
        while let Some(v) = stack.pop() {
            if owner[v].is_some() {
                return Ok(false);
            }
            owner[v] = Some(i);
            stack.extend_from_slice(&children[v]);
        }
    }
    Ok(true)
}

/// Shortest-path tree of `G - {arc}` from the same source.
#[derive(Debug, Clone)]
pub struct ExcludedTree {
    pub arc: EdgeId,
    pub tree: ShortestPathTree,
}

#[derive(Debug, Clone)]
pub struct ExcludeResult {
    entries: Vec<ExcludedTree>,
}

impl ExcludeResult {
    pub fn entries(&self) -> &[ExcludedTree] {
        &self.entries
    }

    pub fn get(&self, arc: EdgeId) -> Option<&ExcludedTree> {
        self.entries.iter().find(|x| x.arc == arc)
    }

    /// Distance to `v` avoiding `arc`; `None` if `v` becomes unreachable or
    /// `arc` was not excluded.
    pub fn dist(&self, arc: EdgeId, v: VertexId) -> Option<PathWeight> {
        self.get(arc)?.tree.dist(v)
    }
}

fn check_tree(g: &Graph, s: VertexId, t: &ShortestPathTree) -> Result<()> {
    let bad = |msg: String| Err(Error::InconsistentTree(msg));
    if t.source() != s || t.vertex_count() != g.vertex_count() {
        return bad(format!("tree is rooted at {} over {} vertices", t.source(), t.vertex_count()));
    }
    if t.dist(s) != Some(PathWeight::ZERO) {
        return bad("source distance is not zero".into());
    }
    for v in g.vertices() {
        let Some(e) = t.parent_arc(v) else {
            if v != s && t.dist(v).is_some() {
                return bad(format!("vertex {v} has a distance but no parent"));
            }
            continue;
        };
        if e >= g.arc_count() || g.arc(e).head != v {
            return bad(format!("parent arc of {v} does not enter it"));
        }
        let arc = g.arc(e);
        if t.dist(arc.tail).map(|d| d.extend(arc.weight)) != t.dist(v) {
            return bad(format!("distance of {v} does not follow its parent"));
        }
    }
    Ok(())
}

/// For each arc of `set`, shortest distances from `s` in `G - {arc}`.
pub fn exclude_shortest_paths(
    g: &Graph,
    s: VertexId,
    tree: &ShortestPathTree,
    set: &IndependentEdgeSet<'_>,
) -> Result<ExcludeResult> {
    check_tree(g, s, tree)?;
    if !std::ptr::eq(tree, set.tree) && tree != set.tree {
        return Err(Error::InconsistentTree("edge set belongs to a different tree".into()));
    }
    let entries = set
        .arcs
        .iter()
        .map(|&arc| ExcludedTree {
            arc,
            tree: sssp_filtered(g, s, |e| e != arc),
        })
        .collect();
    Ok(ExcludeResult { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::RandomGraphConfig;
    use crate::oracles::brute_paths;
    use crate::sssp::sssp;
    use crate::testgraphs::*;

    #[test]
    fn root_children_are_independent() {
        let g = g_diamond();
        let t = sssp(&g, 0);
        let set = IndependentEdgeSet::root_arcs(&g, &t);
        assert!(check_independent(&g, &t, set.arcs()).unwrap());
        assert!(check_independent(&g, &t, &[]).unwrap());
    }

    #[test]
    fn nested_arcs_are_dependent() {
        let g = g_diamond();
        let t = sssp(&g, 0);
        let a = g.find_arc(0, 1).unwrap();
        let b = g.find_arc(1, 3).unwrap();
        assert!(!check_independent(&g, &t, &[a, b]).unwrap());
        assert_eq!(IndependentEdgeSet::new(&g, &t, vec![a, b]).unwrap_err(), Error::NotIndependent);
    }

    #[test]
    fn non_tree_arc_is_an_error() {
        let g = g_diamond();
        let t = sssp(&g, 0);
        let e = g.find_arc(1, 2).unwrap();
        assert_eq!(check_independent(&g, &t, &[e]).unwrap_err(), Error::EdgeNotInTree(e));
    }

    #[test]
    fn diamond_excluding_first_arc() {
        let g = g_diamond();
        let t = sssp(&g, 0);
        let a = g.find_arc(0, 1).unwrap();
        let set = IndependentEdgeSet::new(&g, &t, vec![a]).unwrap();
        let r = exclude_shortest_paths(&g, 0, &t, &set).unwrap();
        assert_eq!(r.dist(a, 3), Some(PathWeight::new(3, 2)));
        assert_eq!(r.dist(a, 1), None);
    }

    #[test]
    fn share_excluding_first_arc() {
        let g = g_share();
        let t = sssp(&g, 0);
        let a = g.find_arc(0, 1).unwrap();
        let set = IndependentEdgeSet::new(&g, &t, vec![a]).unwrap();
        let r = exclude_shortest_paths(&g, 0, &t, &set).unwrap();
        assert_eq!(r.dist(a, 3), Some(PathWeight::new(10, 1)));
    }

    #[test]
    fn irrelevant_exclusion_keeps_distance() {
        // 0->1 is off every shortest path to 2
        let g = Graph::from_triples(3, &[(0, 2, 1), (0, 1, 5), (1, 2, 1)]).unwrap();
        let t = sssp(&g, 0);
        let a = g.find_arc(0, 1).unwrap();
        let set = IndependentEdgeSet::new(&g, &t, vec![a]).unwrap();
        let r = exclude_shortest_paths(&g, 0, &t, &set).unwrap();
        assert_eq!(r.dist(a, 2), t.dist(2));
    }

    #[test]
    fn inconsistent_tree_is_rejected() {
        let g = g_diamond();
        let t = sssp(&g, 1);
        let set = IndependentEdgeSet::root_arcs(&g, &t);
        assert!(matches!(
            exclude_shortest_paths(&g, 0, &t, &set),
            Err(Error::InconsistentTree(_))
        ));
        let other = sssp(&g_share(), 0);
        let set = IndependentEdgeSet::root_arcs(&g_share(), &other);
        assert!(exclude_shortest_paths(&g, 0, &sssp(&g, 0), &set).is_err());
    }

    /// Exclude distances agree with the exhaustive minimum over simple paths
    /// avoiding the arc, and never beat the unrestricted distance.
    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..60 {
            let cfg = if seed % 2 == 0 {
                RandomGraphConfig::standard(6)
            } else {
                RandomGraphConfig::zero_weight_variant(6)
            };
            let g = cfg.generate(seed);
            for s in g.vertices() {
                let t = sssp(&g, s);
                let set = IndependentEdgeSet::root_arcs(&g, &t);
                let r = exclude_shortest_paths(&g, s, &t, &set).unwrap();
                for x in r.entries() {
                    let (a, b) = (g.arc(x.arc).tail, g.arc(x.arc).head);
                    for v in g.vertices().filter(|&v| v != s) {
                        let best = brute_paths(&g, s, v, usize::MAX)
                            .unwrap()
                            .into_iter()
                            .find(|p| !p.vertices.windows(2).any(|w| w == [a, b]))
                            .map(|p| p.weight);
                        assert_eq!(x.tree.dist(v), best, "seed {seed} s {s} v {v}");
                        if let (Some(d), Some(base)) = (x.tree.dist(v), t.dist(v)) {
                            assert!(d >= base);
                        }
                    }
                }
            }
        }
    }
}
