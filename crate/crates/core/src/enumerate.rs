//! Simple paths and simple cycles of a whole graph, in nondecreasing weight
//! order.
//!
//! [`AllSisp`] grows paths one arc at a time from both ends. Every path of
//! two or more arcs is the overlap of its left subpath (all but the last
//! arc) and its right subpath (all but the first arc). Once a path has been
//! extracted, it is joined with every known path that shares its left or
//! right subpath.
//!
//! [`AllSisc`] keeps one candidate per minimum vertex `j`: the next simple
//! cycle whose smallest vertex is `j`. Each emission takes the global
//! minimum and advances only that slot.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracles::Yen;
use crate::path::{is_simple, Cycle, PathArena, PathId, SimplePath};
use crate::split::{split_all, split_vertex};
use crate::sssp::sssp;
use crate::weight::PathWeight;

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Queued {
    weight: PathWeight,
    vertices: Vec<VertexId>,
    id: PathId,
}

/// Counters for one [`AllSisp`] cursor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AllSispStats {
    pub emitted: usize,
    pub queued: usize,
    /// Joins skipped because the same (left, right) pair was queued before.
    pub duplicates_suppressed: usize,
    /// Largest `|L(π)|` or `|R(π)|` seen for a path `π` with at least one arc.
    pub max_extension_set: usize,
}

/// Resumable cursor over all simple paths with at least one arc.
///
/// Undirected graphs are walked on their bidirected arcs, so each path is
/// produced once per direction.
pub struct AllSisp<'g> {
    g: &'g Graph,
    arena: PathArena,
    heap: BinaryHeap<Reverse<Queued>>,
    trivial: Vec<PathId>,
    // indexed by PathId
    left_ext: Vec<Vec<PathId>>,
    right_ext: Vec<Vec<PathId>>,
    seen: HashSet<(PathId, PathId)>,
    last: Option<(PathWeight, Vec<VertexId>)>,
    stats: AllSispStats,
}

impl<'g> AllSisp<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let mut arena = PathArena::new();
        let trivial: Vec<PathId> = g.vertices().map(|v| arena.trivial(v)).collect();
        let mut it = AllSisp {
            g,
            arena,
            heap: BinaryHeap::with_capacity(g.arc_count()),
            trivial,
            left_ext: Vec::new(),
            right_ext: Vec::new(),
            seen: HashSet::new(),
            last: None,
            stats: AllSispStats::default(),
        };
        for e in 0..g.arc_count() {
            let id = it.arena.edge(g, e);
            let arc = g.arc(e);
            let (tv, hv) = (it.trivial[arc.tail], it.trivial[arc.head]);
            it.ext_mut(hv, true).push(id);
            it.ext_mut(tv, false).push(id);
            it.enqueue(id);
        }
        it
    }

    pub fn stats(&self) -> AllSispStats {
        self.stats
    }

    fn ext_mut(&mut self, id: PathId, left: bool) -> &mut Vec<PathId> {
        let table = if left { &mut self.left_ext } else { &mut self.right_ext };
        if table.len() <= id.index() {
            table.resize_with(id.index() + 1, Vec::new);
        }
        &mut table[id.index()]
    }

    fn ext(&self, id: PathId, left: bool) -> &[PathId] {
        let table = if left { &self.left_ext } else { &self.right_ext };
        table.get(id.index()).map_or(&[], Vec::as_slice)
    }

    fn enqueue(&mut self, id: PathId) {
        self.heap.push(Reverse(Queued {
            weight: self.arena.get(id).weight,
            vertices: self.arena.vertices(id),
            id,
        }));
        self.stats.queued += 1;
    }

    fn subpaths(&self, id: PathId) -> (PathId, PathId) {
        let r = self.arena.get(id);
        match (r.left, r.right) {
            (Some(l), Some(rt)) => (l, rt),
            _ => (self.trivial[r.first], self.trivial[r.last]),
        }
    }

    /// Queues `join(left, right)` unless that pair was queued already, and
    /// records it in `L(right)` and `R(left)`.
    fn extend(&mut self, left: PathId, right: PathId) {
        if !self.seen.insert((left, right)) {
            self.stats.duplicates_suppressed += 1;
            return;
        }
        let sigma = self.arena.join(self.g, left, right);
        self.ext_mut(right, true).push(sigma);
        self.ext_mut(left, false).push(sigma);
        let sizes = self.ext(right, true).len().max(self.ext(left, false).len());
        self.stats.max_extension_set = self.stats.max_extension_set.max(sizes);
        self.enqueue(sigma);
    }
}

impl Iterator for AllSisp<'_> {
    type Item = SimplePath;

    fn next(&mut self) -> Option<SimplePath> {
        let Reverse(q) = self.heap.pop()?;
        assert!(is_simple(&q.vertices), "non-simple path {:?} reached the output", q.vertices);
        let key = (q.weight, q.vertices);
        assert!(self.last.as_ref().is_none_or(|prev| *prev < key), "output order broken");

        let pi = q.id;
        let (x, y) = (self.arena.get(pi).first, self.arena.get(pi).last);
        let (lsub, rsub) = self.subpaths(pi);

        let lefts: Vec<PathId> = self
            .ext(lsub, true)
            .iter()
            .copied()
            .filter(|&p| self.arena.get(p).first != y)
            .collect();
        for p in lefts {
            self.extend(p, pi);
        }
        let rights: Vec<PathId> = self
            .ext(rsub, false)
            .iter()
            .copied()
            .filter(|&p| self.arena.get(p).last != x)
            .collect();
        for p in rights {
            self.extend(pi, p);
        }

        self.stats.emitted += 1;
        let path = SimplePath {
            weight: key.0,
            vertices: key.1.clone(),
        };
        self.last = Some(key);
        Some(path)
    }
}

/// The first `min(k, total)` simple paths of `g`.
pub fn all_sisp(g: &Graph, k: usize) -> Result<Vec<SimplePath>> {
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    Ok(AllSisp::new(g).take(k).collect())
}

struct Slot {
    next: Option<Cycle>,
    emitted: usize,
    cursor: Option<Yen<'static>>,
}

/// Resumable cursor over all simple cycles of a directed graph.
pub struct AllSisc<'g> {
    g: &'g Graph,
    slots: Vec<Slot>,
}

impl<'g> AllSisc<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        let split = split_all(g)?;
        let slots = g
            .vertices()
            .map(|j| {
                let sub = split.induced_from(j);
                let tree = sssp(&sub, split.out_vertex(j));
                let target = split.in_vertex(j);
                let next = tree.path_to(&sub, target).map(|p| {
                    let mut cyc = split.collapse(&p);
                    cyc.pop();
                    let wt = tree.dist(target).expect("reachable").wt;
                    Cycle::new(PathWeight::new(wt, cyc.len() as u32), cyc, true)
                });
                Slot {
                    next,
                    emitted: 0,
                    cursor: None,
                }
            })
            .collect();
        Ok(AllSisc { g, slots })
    }

    /// Cycles emitted so far whose minimum vertex is `j`.
    pub fn emitted_from(&self, j: VertexId) -> usize {
        self.slots[j].emitted
    }

    fn cycle_cursor(&self, j: VertexId) -> Yen<'static> {
        let sub = self.g.filter_arcs(|e| e.tail >= j && e.head >= j);
        let split = split_vertex(&sub, j).expect("directed graph, valid vertex");
        Yen::owned(split.graph, split.out_vertex, split.in_vertex).expect("valid endpoints")
    }

    fn advance(&mut self, j: VertexId) {
        if self.slots[j].cursor.is_none() {
            let mut cursor = self.cycle_cursor(j);
            let first = cursor.next();
            debug_assert_eq!(
                first.as_ref().map(|p| &p.vertices[..p.vertices.len() - 1]),
                self.slots[j].next.as_ref().map(|c| &c.vertices[..])
            );
            self.slots[j].cursor = Some(cursor);
        }
        let slot = &mut self.slots[j];
        slot.next = slot.cursor.as_mut().and_then(Iterator::next).map(|p| {
            let mut cyc = p.vertices;
            cyc.pop();
            Cycle::new(p.weight, cyc, true)
        });
    }
}

impl Iterator for AllSisc<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        let j = (0..self.slots.len())
            .filter(|&j| self.slots[j].next.is_some())
            .min_by(|&a, &b| self.slots[a].next.cmp(&self.slots[b].next))?;
        let c = self.slots[j].next.clone().expect("filtered");
        assert!(c.is_simple() && c.vertices[0] == j);
        self.slots[j].emitted += 1;
        self.advance(j);
        Some(c)
    }
}

/// The first `min(k, total)` simple cycles of a directed graph.
pub fn all_sisc(g: &Graph, k: usize) -> Result<Vec<Cycle>> {
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    Ok(AllSisc::new(g)?.take(k).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete_digraph, RandomGraphConfig};
    use crate::oracles::{brute_all_paths, brute_cycles};
    use crate::testgraphs::*;
    use crate::weight::Weight;

    fn wts<T>(xs: &[T], w: impl Fn(&T) -> PathWeight) -> Vec<Weight> {
        xs.iter().map(|x| w(x).wt).collect()
    }

    #[test]
    fn diamond_paths() {
        let g = g_diamond();
        let got = all_sisp(&g, 8).unwrap();
        let want = brute_all_paths(&g).unwrap();
        assert_eq!(got, want[..8]);
        assert_eq!(wts(&got, |p| p.weight), vec![1, 1, 1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn single_edge() {
        let got = all_sisp(&g_edge(5), 10).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].weight.wt, 5);
    }

    #[test]
    fn triangle_paths() {
        let got = all_sisp(&g_tri(), 100).unwrap();
        assert_eq!(wts(&got, |p| p.weight), vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(all_sisp(&g_tri(), 0).is_err());
        assert!(all_sisc(&g_tri(), 0).is_err());
    }

    #[test]
    fn iterator_resumes() {
        let g = complete_digraph(5, 4, 3);
        let mut it = AllSisp::new(&g);
        let head: Vec<_> = it.by_ref().take(7).collect();
        let tail: Vec<_> = it.take(5).collect();
        let all = all_sisp(&g, 12).unwrap();
        assert_eq!([head, tail].concat(), all);
    }

    #[test]
    fn both_subpaths_can_form_the_same_join() {
        let g = complete_digraph(5, 6, 0);
        let mut it = AllSisp::new(&g);
        it.by_ref().for_each(drop);
        assert!(it.stats().duplicates_suppressed > 0);
    }

    #[test]
    fn paths_complete_on_small_graphs() {
        for seed in 0..30 {
            let g = if seed < 5 {
                complete_digraph(5, 6, seed)
            } else {
                RandomGraphConfig::zero_weight_variant(6).generate(seed)
            };
            let want = brute_all_paths(&g).unwrap();
            let mut it = AllSisp::new(&g);
            let got: Vec<_> = it.by_ref().collect();
            assert_eq!(got, want, "seed {seed}");
            assert!(it.stats().max_extension_set <= g.vertex_count().saturating_sub(2).max(1));
        }
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(wts(&all_sisc(&g_cyc2(), 2).unwrap(), |c| c.weight), vec![2, 5]);
        let tri = all_sisc(&g_tri(), 3).unwrap();
        assert_eq!(tri.len(), 1);
        assert_eq!(tri[0].weight.wt, 3);
        assert!(all_sisc(&g_dag(), 5).unwrap().is_empty());
    }

    #[test]
    fn undirected_cycles_are_refused() {
        let g = Graph::from_triples(3, &[(0, 1, 1)]).unwrap().to_directed();
        assert!(AllSisc::new(&g).is_ok());
        let u = Graph::undirected(2, [crate::graph::Edge::new(0, 1, 1)]).unwrap();
        assert_eq!(all_sisc(&u, 1).unwrap_err(), Error::UndirectedInput);
    }

    #[test]
    fn cycles_complete_on_small_graphs() {
        for seed in 0..30 {
            let g = if seed < 5 {
                complete_digraph(5, 6, seed)
            } else {
                RandomGraphConfig::zero_weight_variant(6).generate(seed)
            };
            let want = brute_cycles(&g, usize::MAX, None).unwrap();
            let mut it = AllSisc::new(&g).unwrap();
            let got: Vec<_> = it.by_ref().collect();
            assert_eq!(got, want, "seed {seed}");
            for j in g.vertices() {
                assert_eq!(it.emitted_from(j), want.iter().filter(|c| c.vertices[0] == j).count());
            }
        }
    }
}
