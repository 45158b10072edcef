//! k simple shortest paths for every ordered vertex pair.
//!
//! The computation has two halves:
//!
//! 1. Build a *nearly* correct table `Q_k`: for each pair it holds the true
//!    k shortest simple paths, except that when the `k - 1` shortest all
//!    leave `x` through the same arc `(x, a)`, the k-th entry is instead the
//!    shortest path that avoids `(x, a)`.
//! 2. [`compute_apsisp`] repairs those entries by left extension. If the
//!    true k-th path from `x` also starts with `(x, a)`, its remainder is the
//!    k-th path from `a` to `y`, so it is found by prepending `(x, a)` to
//!    that entry. Each repaired entry triggers further left extensions
//!    through the `Extensions(x, y)` index.
//!
//! For `k = 2`, `Q_2` comes from one shortest-path tree per source plus
//! per-arc exclusion ([`compute_q2`]). For `k >= 3`, `Q_k` is assembled from
//! `(k - 1)`-tables of `G - I_x`, the graph without the arcs entering `x`
//! ([`assemble_qk`]), which multiplies the cost by `n` per level.
//!
//! All tables are ordered by `(wt, len, vertex sequence)`. Under this total
//! order the k-SiSP set of every pair is unique and the extension step is
//! exact at the sequence level, not just by weight.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::exclude::{exclude_shortest_paths, IndependentEdgeSet};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::{is_simple, PathArena, PathId, SimplePath};
use crate::sssp::{sssp, ShortestPathTree};
use crate::weight::PathWeight;

/// Default ceiling on `k`; every level of recursion costs a factor `n`.
pub const DEFAULT_MAX_K: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApsispConfig {
    pub max_k: usize,
}

impl Default for ApsispConfig {
    fn default() -> Self {
        ApsispConfig { max_k: DEFAULT_MAX_K }
    }
}

/// An `n x n` table of sorted path sets sharing one arena. Used both for the
/// nearly-correct `Q_k` input and the exact `P*_k` output.
#[derive(Debug, Clone)]
pub struct PathTable {
    n: usize,
    k: usize,
    arena: PathArena,
    sets: Vec<Vec<PathId>>,
}

pub type QTable = PathTable;
pub type PTable = PathTable;

impl PathTable {
    fn empty(n: usize, k: usize) -> Self {
        PathTable {
            n,
            k,
            arena: PathArena::new(),
            sets: vec![Vec::new(); n * n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arena(&self) -> &PathArena {
        &self.arena
    }

    #[inline]
    fn idx(&self, x: VertexId, y: VertexId) -> usize {
        x * self.n + y
    }

    /// Record handles of the set for `(x, y)`, ascending.
    pub fn set(&self, x: VertexId, y: VertexId) -> &[PathId] {
        &self.sets[self.idx(x, y)]
    }

    pub fn paths(&self, x: VertexId, y: VertexId) -> Vec<SimplePath> {
        self.set(x, y).iter().map(|&id| self.arena.to_simple_path(id)).collect()
    }

    pub fn weights(&self, x: VertexId, y: VertexId) -> Vec<PathWeight> {
        self.set(x, y).iter().map(|&id| self.arena.get(id).weight).collect()
    }

    /// Ordered pairs `(x, y)`, `x != y`, in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
    }

    fn cmp(&self, a: PathId, b: PathId) -> Ordering {
        cmp_records(&self.arena, a, b)
    }

    /// Builds a table from explicit per-pair path lists.
    pub fn from_paths(g: &Graph, k: usize, mut rows: impl FnMut(VertexId, VertexId) -> Vec<SimplePath>) -> Result<Self> {
        let n = g.vertex_count();
        let mut t = PathTable::empty(n, k);
        for x in 0..n {
            for y in (0..n).filter(|&y| y != x) {
                let mut paths = rows(x, y);
                paths.sort();
                let mut ids = Vec::with_capacity(paths.len());
                for p in paths {
                    let id = t
                        .arena
                        .from_vertices(g, &p.vertices)
                        .ok_or_else(|| Error::InvalidTable(format!("path {p} is not in the graph")))?;
                    ids.push(id);
                }
                let i = t.idx(x, y);
                t.sets[i] = ids;
            }
        }
        Ok(t)
    }

    /// Cheap structural checks: sizes, endpoints, order, simplicity.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n != g.vertex_count() {
            return Err(Error::InvalidTable(format!(
                "table covers {} vertices, graph has {}",
                self.n,
                g.vertex_count()
            )));
        }
        for (x, y) in self.pairs() {
            let set = self.set(x, y);
            if set.len() > self.k {
                return Err(Error::InvalidTable(format!("set ({x},{y}) holds {} > k paths", set.len())));
            }
            for &id in set {
                let r = self.arena.get(id);
                if r.first != x || r.last != y {
                    return Err(Error::InvalidTable(format!("set ({x},{y}) holds a path with wrong ends")));
                }
                if !self.arena.is_simple(id) {
                    return Err(Error::InvalidTable(format!("set ({x},{y}) holds a non-simple path")));
                }
            }
            if set.windows(2).any(|w| self.cmp(w[0], w[1]) != Ordering::Less) {
                return Err(Error::InvalidTable(format!("set ({x},{y}) is not strictly sorted")));
            }
        }
        Ok(())
    }
}

/// `(wt, len)` first; vertex sequences only on a tie.
fn cmp_records(arena: &PathArena, a: PathId, b: PathId) -> Ordering {
    arena
        .get(a)
        .weight
        .cmp(&arena.get(b).weight)
        .then_with(|| arena.vertices(a).cmp(&arena.vertices(b)))
}

/// Arena records for every tree path, built by appending parent arcs.
struct TreeChains<'a> {
    g: &'a Graph,
    tree: &'a ShortestPathTree,
    memo: Vec<Option<PathId>>,
}

impl<'a> TreeChains<'a> {
    fn new(g: &'a Graph, tree: &'a ShortestPathTree) -> Self {
        TreeChains {
            g,
            tree,
            memo: vec![None; g.vertex_count()],
        }
    }

    fn get(&mut self, arena: &mut PathArena, v: VertexId) -> Option<PathId> {
        self.tree.dist(v)?;
        let mut pending = Vec::new();
        let mut cur = v;
        let mut base = loop {
            if let Some(id) = self.memo[cur] {
                break id;
            }
            match self.tree.parent_arc(cur) {
                Some(e) => {
                    pending.push((cur, e));
                    cur = self.g.arc(e).tail;
                }
                None => {
                    let id = arena.trivial(cur);
                    self.memo[cur] = Some(id);
                    break id;
                }
            }
        };
        while let Some((u, e)) = pending.pop() {
            base = arena.append(self.g, base, e);
            self.memo[u] = Some(base);
        }
        Some(base)
    }
}

/// `Q_2`: for each pair, the shortest path and the shortest path avoiding
/// its first arc.
pub fn compute_q2(g: &Graph) -> QTable {
    let n = g.vertex_count();
    let mut t = PathTable::empty(n, 2);
    for x in 0..n {
        let tree = sssp(g, x);
        let set = IndependentEdgeSet::root_arcs(g, &tree);
        let excluded = exclude_shortest_paths(g, x, &tree, &set).expect("tree was just computed from g");
        let mut first_chains = TreeChains::new(g, &tree);
        let mut second_chains: Vec<TreeChains<'_>> = excluded
            .entries()
            .iter()
            .map(|ex| TreeChains::new(g, &ex.tree))
            .collect();
        for y in (0..n).filter(|&y| y != x) {
            let Some(first) = first_chains.get(&mut t.arena, y) else {
                continue;
            };
            let mut ids = vec![first];
            let arc = tree.first_arc(g, y).expect("y != x is reachable");
            let slot = excluded
                .entries()
                .iter()
                .position(|ex| ex.arc == arc)
                .expect("first arc is a root arc");
            if let Some(second) = second_chains[slot].get(&mut t.arena, y) {
                ids.push(second);
            }
            let i = t.idx(x, y);
            t.sets[i] = ids;
        }
    }
    t
}

/// Counters from one run of [`compute_apsisp`], checked against the
/// structural bounds of the extension scheme.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComputeStats {
    pub n: usize,
    pub k: usize,
    /// Left-extended candidates pushed during initialization.
    pub init_pushes: usize,
    /// Left-extended candidates pushed after an update.
    pub update_pushes: usize,
    /// Entries registered across all `Extensions(a, y)` sets.
    pub extension_entries: usize,
    /// Pairs whose set changed in the main loop.
    pub updated_pairs: usize,
    /// Largest number of main-loop updates seen by a single pair.
    pub max_updates_per_pair: usize,
    /// Candidates that qualified for insertion but were not simple.
    pub nonsimple_rejected: usize,
    /// Candidates that qualified for insertion but were already present.
    pub duplicate_rejected: usize,
}

impl ComputeStats {
    pub fn queue_pushes(&self) -> usize {
        self.init_pushes + self.update_pushes
    }

    /// Human-readable list of violated bounds; empty when all hold.
    pub fn violations(&self) -> Vec<String> {
        let pairs = self.n * self.n.saturating_sub(1);
        let mut v = Vec::new();
        if self.max_updates_per_pair > 1 {
            v.push(format!("a pair was updated {} times", self.max_updates_per_pair));
        }
        if self.queue_pushes() > 2 * pairs {
            v.push(format!("{} queue pushes exceed 2n(n-1) = {}", self.queue_pushes(), 2 * pairs));
        }
        if self.extension_entries > pairs {
            v.push(format!("{} extension entries exceed n(n-1) = {pairs}", self.extension_entries));
        }
        if self.nonsimple_rejected > 0 {
            v.push(format!("{} non-simple paths qualified for insertion", self.nonsimple_rejected));
        }
        if self.duplicate_rejected > 0 {
            v.push(format!("{} duplicate paths qualified for insertion", self.duplicate_rejected));
        }
        v
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    weight: PathWeight,
    vertices: Vec<VertexId>,
    id: PathId,
}

impl Candidate {
    fn new(arena: &PathArena, id: PathId) -> Self {
        Candidate {
            weight: arena.get(id).weight,
            vertices: arena.vertices(id),
            id,
        }
    }
}

/// Turns a nearly-correct table `q` into the exact k-SiSP table.
pub fn compute_apsisp(g: &Graph, k: usize, q: QTable) -> Result<(PTable, ComputeStats)> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    if q.k != k {
        return Err(Error::InvalidTable(format!("table was built for k = {}, not {k}", q.k)));
    }
    q.validate(g)?;

    let n = g.vertex_count();
    let mut p = q;
    // sets of Q_k(a, y) sizes are needed after P starts changing
    let q_len: Vec<usize> = p.sets.iter().map(Vec::len).collect();
    let mut extensions: Vec<Vec<EdgeId>> = vec![Vec::new(); n * n];
    let mut updates = vec![0usize; n * n];
    let mut heap = BinaryHeap::new();
    let mut stats = ComputeStats {
        n,
        k,
        ..Default::default()
    };

    for (x, y) in p.pairs().collect::<Vec<_>>() {
        let set = p.set(x, y);
        if set.len() < k - 1 {
            continue;
        }
        let arc = p.arena.get(set[0]).first_arc.expect("x != y");
        if set[..k - 1].iter().any(|&id| p.arena.get(id).first_arc != Some(arc)) {
            continue;
        }
        let a = g.arc(arc).head;
        if a == y {
            // the shared prefix is the whole arc (x, y); nothing to extend
            continue;
        }
        extensions[p.idx(a, y)].push(arc);
        stats.extension_entries += 1;
        if q_len[p.idx(a, y)] == k {
            let kth = *p.set(a, y).last().expect("non-empty");
            let id = p.arena.prepend(g, arc, kth);
            heap.push(Reverse(Candidate::new(&p.arena, id)));
            stats.init_pushes += 1;
        }
    }

    while let Some(Reverse(cand)) = heap.pop() {
        let rec = p.arena.get(cand.id);
        let (x, y) = (rec.first, rec.last);
        let i = p.idx(x, y);
        let qualifies = match p.sets[i].len() {
            len if len == k - 1 => true,
            len if len == k => p.cmp(cand.id, p.sets[i][k - 1]) == Ordering::Less,
            _ => false,
        };
        if !qualifies {
            continue;
        }
        if !is_simple(&cand.vertices) {
            stats.nonsimple_rejected += 1;
            continue;
        }
        if p.sets[i].iter().any(|&id| p.arena.vertices(id) == cand.vertices) {
            stats.duplicate_rejected += 1;
            continue;
        }
        if p.sets[i].len() == k {
            p.sets[i].pop();
        }
        let pos = p.sets[i]
            .iter()
            .position(|&id| cmp_records(&p.arena, cand.id, id) == Ordering::Less)
            .unwrap_or(p.sets[i].len());
        p.sets[i].insert(pos, cand.id);
        updates[i] += 1;

        for e in extensions[i].clone() {
            let id = p.arena.prepend(g, e, cand.id);
            heap.push(Reverse(Candidate::new(&p.arena, id)));
            stats.update_pushes += 1;
        }
    }

    stats.updated_pairs = updates.iter().filter(|&&u| u > 0).count();
    stats.max_updates_per_pair = updates.iter().copied().max().unwrap_or(0);
    Ok((p, stats))
}

/// Exact 2-SiSP table: [`compute_q2`] followed by [`compute_apsisp`].
pub fn two_apsisp(g: &Graph) -> PTable {
    two_apsisp_traced(g).0
}

pub fn two_apsisp_traced(g: &Graph) -> (PTable, ComputeStats) {
    compute_apsisp(g, 2, compute_q2(g)).expect("Q_2 built here is well formed")
}

/// `Q_k` for `k >= 3` from the `(k - 1)`-tables.
///
/// `p_minus` is the `(k - 1)`-table of `g`; `p_excl[x]` is the
/// `(k - 1)`-table of `G - I_x`. Each `Q_k(x, y)` is `P*_{k-1}(x, y)` plus
/// the smallest `(x, a) ∘ P*x_{k-1}(a, y)[count_a]` not already present,
/// where `count_a` counts entries of `P*_{k-1}(x, y)` leaving through `(x, a)`.
pub fn assemble_qk(g: &Graph, k: usize, p_minus: &PTable, p_excl: &[PTable]) -> Result<QTable> {
    let n = g.vertex_count();
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    if p_minus.n != n || p_minus.k != k - 1 {
        return Err(Error::InvalidTable("p_minus does not match the graph and k - 1".into()));
    }
    if p_excl.len() != n || p_excl.iter().any(|t| t.n != n || t.k != k - 1) {
        return Err(Error::InvalidTable("need one (k - 1)-table per vertex".into()));
    }

    PathTable::from_paths(g, k, |x, y| {
        let mut paths = p_minus.paths(x, y);
        let mut best: Option<SimplePath> = None;
        for &e in g.out_arcs(x) {
            let arc = g.arc(e);
            let a = arc.head;
            let count = paths.iter().filter(|p| p.vertices[1] == a).count();
            let cand = if a == y {
                (count == 0).then(|| SimplePath {
                    weight: PathWeight::ZERO.extend(arc.weight),
                    vertices: vec![x, y],
                })
            } else {
                p_excl[x].set(a, y).get(count).map(|&id| {
                    let rest = p_excl[x].arena.to_simple_path(id);
                    let mut vertices = Vec::with_capacity(rest.vertices.len() + 1);
                    vertices.push(x);
                    vertices.extend_from_slice(&rest.vertices);
                    SimplePath {
                        weight: PathWeight::new(rest.weight.wt + arc.weight, rest.weight.len + 1),
                        vertices,
                    }
                })
            };
            if let Some(c) = cand {
                if !paths.contains(&c) && best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
        paths.extend(best);
        paths
    })
}

/// Exact k-SiSP table for all pairs.
pub fn apsisp(g: &Graph, k: usize) -> Result<PTable> {
    apsisp_traced(g, k, &ApsispConfig::default(), &mut Vec::new())
}

/// [`apsisp`] with a configurable `k` ceiling, recording the counters of
/// every [`compute_apsisp`] run (recursive calls included).
pub fn apsisp_traced(g: &Graph, k: usize, config: &ApsispConfig, trace: &mut Vec<ComputeStats>) -> Result<PTable> {
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if k > config.max_k {
        return Err(Error::KTooLarge { k, max: config.max_k });
    }
    match k {
        1 => Ok(one_apsisp(g)),
        2 => {
            let (t, stats) = two_apsisp_traced(g);
            trace.push(stats);
            Ok(t)
        }
        _ => {
            let mut p_excl = Vec::with_capacity(g.vertex_count());
            for x in g.vertices() {
                p_excl.push(apsisp_traced(&g.without_in_arcs(x), k - 1, config, trace)?);
            }
            // simple x -> y paths never re-enter x, so row x of the table for
            // G - I_x is row x of the (k - 1)-table of g
            let p_minus = PathTable::from_paths(g, k - 1, |x, y| p_excl[x].paths(x, y))?;
            let q = assemble_qk(g, k, &p_minus, &p_excl)?;
            let (t, stats) = compute_apsisp(g, k, q)?;
            trace.push(stats);
            Ok(t)
        }
    }
}

/// `k = 1`: one shortest-path tree per source.
fn one_apsisp(g: &Graph) -> PTable {
    let n = g.vertex_count();
    let mut t = PathTable::empty(n, 1);
    for x in 0..n {
        let tree = sssp(g, x);
        let mut chains = TreeChains::new(g, &tree);
        for y in (0..n).filter(|&y| y != x) {
            if let Some(id) = chains.get(&mut t.arena, y) {
                let i = t.idx(x, y);
                t.sets[i] = vec![id];
            }
        }
    }
    t
}
