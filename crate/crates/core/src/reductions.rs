//! Graph constructions that turn one problem into another, each with a
//! decoder that maps the answer back.
//!
//! | gadget | source problem | query on the gadget |
//! |---|---|---|
//! | [`gadget_mwc_to_2sisp`] | minimum-weight cycle | 2nd shortest simple `p_0 -> p_n` path |
//! | [`gadget_ksisp_to_ksisc`] | k shortest simple `s -> t` paths | k shortest cycles through `z` |
//! | [`gadget_mwc_to_kth_all_sisc`] | minimum-weight cycle | k-th cycle overall |
//! | [`gadget_apsp_to_second_apsisp`] | all-pairs distances | 2nd shortest `a_i -> b_j` paths |
//!
//! Every construction is linear in `n + m` and asserts so.

use crate::apsisp::{two_apsisp, PTable};
use crate::cycles::{k_sisc, CycleSet};
use crate::enumerate::all_sisc;
use crate::error::{check_vertex, Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::oracles::yen;
use crate::path::{Cycle, SimplePath};
use crate::weight::{PathWeight, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    MwcToSecondPath,
    KsispToKsisc,
    MwcToKthCycle,
    ApspToSecondApsisp,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::MwcToSecondPath => "mwc-2sisp",
            GadgetKind::KsispToKsisc => "ksisp-ksisc",
            GadgetKind::MwcToKthCycle => "mwc-kth-sisc",
            GadgetKind::ApspToSecondApsisp => "apsp-2apsisp",
        }
    }
}

/// What to solve on the constructed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetQuery {
    /// The 2nd simple shortest `source -> target` path.
    SecondPath { source: VertexId, target: VertexId },
    /// The `k` simple shortest cycles through `vertex`.
    CyclesThrough { vertex: VertexId, k: usize },
    /// The `k`-th cycle in the global weight order.
    KthCycle { k: usize },
    /// The 2nd simple shortest path for every `(sources[i], targets[j])`, `i != j`.
    SecondPathAllPairs { sources: Vec<VertexId>, targets: Vec<VertexId> },
}

#[derive(Debug, Clone)]
pub struct GadgetResult {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub query: GadgetQuery,
    /// Subtracted from the solved weight when decoding.
    pub offset: Weight,
    /// Vertex count of the input graph.
    pub original_n: usize,
    /// Human-readable name of every gadget vertex, using 1-based labels for
    /// input vertices.
    pub names: Vec<String>,
}

/// Decoded minimum-weight cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinCycle {
    Acyclic,
    Found(Cycle),
}

impl MinCycle {
    pub fn weight(&self) -> Option<Weight> {
        match self {
            MinCycle::Acyclic => None,
            MinCycle::Found(c) => Some(c.weight.wt),
        }
    }
}

fn assert_linear(g: &Graph, out: &Graph, c: usize) {
    let size = g.vertex_count() + g.arc_count();
    assert!(out.vertex_count() <= c * size + c, "gadget vertex count is not linear");
    assert!(out.arc_count() <= c * size + c, "gadget arc count is not linear");
}

fn require_directed(g: &Graph) -> Result<()> {
    if g.is_directed() {
        Ok(())
    } else {
        Err(Error::UndirectedInput)
    }
}

fn decode_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Decode(msg.into()))
}

/// Split graph plus a zero-weight spine `p_0 .. p_n`.
///
/// Vertex `v` (with `j = v + 1`) is split into `v_i = 2v` and `v_o = 2v + 1`;
/// `p_j` is `2n + j`. The spine enters `v_o` from `p_{j-1}` at weight
/// `(n - j + 1) W` and leaves `v_i` to `p_j` at weight `j W`, where
/// `W = n * w_max + 1` exceeds every simple path weight of `g`. A detour that
/// leaves at `p_{j-1}` and rejoins at `p_j` costs exactly `(n + 1) W` plus a
/// cycle through `v`; every other detour costs at least `(n + 2) W`.
pub fn gadget_mwc_to_2sisp(g: &Graph) -> Result<GadgetResult> {
    require_directed(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::VertexOutOfRange(0));
    }
    let w = n as Weight * g.max_weight() + 1;
    let p = |j: usize| 2 * n + j;
    let mut arcs = Vec::with_capacity(g.arc_count() + 4 * n);
    for v in 0..n {
        arcs.push(Edge::new(2 * v, 2 * v + 1, 0));
    }
    for e in g.arcs() {
        arcs.push(Edge::new(2 * e.tail + 1, 2 * e.head, e.weight));
    }
    for j in 1..=n {
        let v = j - 1;
        arcs.push(Edge::new(p(j - 1), p(j), 0));
        arcs.push(Edge::new(p(j - 1), 2 * v + 1, (n - j + 1) as Weight * w));
        arcs.push(Edge::new(2 * v, p(j), j as Weight * w));
    }
    let graph = Graph::directed(3 * n + 1, arcs)?;
    assert_linear(g, &graph, 4);

    let mut names = Vec::with_capacity(3 * n + 1);
    for v in 1..=n {
        names.push(format!("{v}_i"));
        names.push(format!("{v}_o"));
    }
    names.extend((0..=n).map(|j| format!("p{j}")));
    Ok(GadgetResult {
        kind: GadgetKind::MwcToSecondPath,
        graph,
        query: GadgetQuery::SecondPath {
            source: p(0),
            target: p(n),
        },
        offset: (n as Weight + 1) * w,
        original_n: n,
        names,
    })
}

/// Adds `z` (id `n`) with zero-weight arcs `t -> z` and `z -> s`. Cycles
/// through `z` are exactly the `s -> t` paths, at equal weight.
pub fn gadget_ksisp_to_ksisc(g: &Graph, s: VertexId, t: VertexId, k: usize) -> Result<GadgetResult> {
    require_directed(g)?;
    let n = g.vertex_count();
    check_vertex(n, s)?;
    check_vertex(n, t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let z = n;
    let arcs = g.arcs().iter().copied().chain([Edge::new(t, z, 0), Edge::new(z, s, 0)]);
    let graph = Graph::directed(n + 1, arcs)?;
    assert_linear(g, &graph, 2);

    let mut names: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    names.push("z".into());
    Ok(GadgetResult {
        kind: GadgetKind::KsispToKsisc,
        graph,
        query: GadgetQuery::CyclesThrough { vertex: z, k },
        offset: 0,
        original_n: n,
        names,
    })
}

/// Attaches `k - 1` zero-weight triangles `x -> d_i -> e_i -> x`, so the
/// `k`-th cycle overall has the minimum cycle weight of `g`.
pub fn gadget_mwc_to_kth_all_sisc(g: &Graph, k: usize, x: VertexId) -> Result<GadgetResult> {
    require_directed(g)?;
    let n = g.vertex_count();
    check_vertex(n, x)?;
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let mut arcs = g.arcs().to_vec();
    let mut names: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    for i in 1..k {
        let d = n + 2 * (i - 1);
        let e = d + 1;
        arcs.extend([Edge::new(x, d, 0), Edge::new(d, e, 0), Edge::new(e, x, 0)]);
        names.push(format!("d{i}"));
        names.push(format!("e{i}"));
    }
    let graph = Graph::directed(n + 2 * (k - 1), arcs)?;
    assert!(graph.vertex_count() <= n + 2 * k && graph.arc_count() <= g.arc_count() + 3 * k);

    Ok(GadgetResult {
        kind: GadgetKind::MwcToKthCycle,
        graph,
        query: GadgetQuery::KthCycle { k },
        offset: 0,
        original_n: n,
        names,
    })
}

/// Hub `s` (id `n`), `a_i` (id `n + 1 + i`) and `b_i` (id `2n + 1 + i`)
/// with `a_i -> s -> b_j` at weight 0 and `a_i -> i`, `j -> b_j` at weight 1.
/// The only other `a_i -> b_j` paths run through `g`, so the 2nd one weighs
/// `dist(i, j) + 2`.
pub fn gadget_apsp_to_second_apsisp(g: &Graph) -> Result<GadgetResult> {
    require_directed(g)?;
    let n = g.vertex_count();
    let hub = n;
    let a = |i: usize| n + 1 + i;
    let b = |i: usize| 2 * n + 1 + i;
    let mut arcs = g.arcs().to_vec();
    for i in 0..n {
        arcs.extend([
            Edge::new(a(i), hub, 0),
            Edge::new(hub, b(i), 0),
            Edge::new(a(i), i, 1),
            Edge::new(i, b(i), 1),
        ]);
    }
    let graph = Graph::directed(3 * n + 1, arcs)?;
    assert_linear(g, &graph, 4);

    let mut names: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    names.push("s".into());
    names.extend((1..=n).map(|i| format!("a{i}")));
    names.extend((1..=n).map(|i| format!("b{i}")));
    Ok(GadgetResult {
        kind: GadgetKind::ApspToSecondApsisp,
        graph,
        query: GadgetQuery::SecondPathAllPairs {
            sources: (0..n).map(a).collect(),
            targets: (0..n).map(b).collect(),
        },
        offset: 2,
        original_n: n,
        names,
    })
}

impl GadgetResult {
    fn expect_kind(&self, kind: GadgetKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            decode_err(format!("gadget is {}, not {}", self.kind.name(), kind.name()))
        }
    }

    /// Minimum-weight cycle from the 2nd `p_0 -> p_n` path. A path of weight
    /// at least `(n + 2) W`, or none at all, means `g` is acyclic. Otherwise
    /// the path must leave the spine once and rejoin right after its exit
    /// point.
    pub fn decode_second_path(&self, second: Option<&SimplePath>) -> Result<MinCycle> {
        self.expect_kind(GadgetKind::MwcToSecondPath)?;
        let Some(path) = second else {
            return Ok(MinCycle::Acyclic);
        };
        let n = self.original_n;
        let w = self.offset / (n as Weight + 1);
        if path.weight.wt >= self.offset + w {
            // any detour that does not close a cycle costs at least (n + 2) W
            return Ok(MinCycle::Acyclic);
        }
        let spine = |v: VertexId| v >= 2 * n;
        let vs = &path.vertices;
        let Some(start) = vs.iter().position(|&v| !spine(v)) else {
            return decode_err("second path never leaves the spine");
        };
        let end = start + vs[start..].iter().position(|&v| spine(v)).unwrap_or(vs.len() - start);
        if end == vs.len() || vs[end..].iter().any(|&v| !spine(v)) {
            return decode_err("second path leaves the spine more than once");
        }
        let (entry, exit) = (vs[start], vs[end - 1]);
        let (j_in, j_out) = (vs[start - 1] - 2 * n + 1, vs[end] - 2 * n);
        if j_in != j_out || entry + 1 != 2 * j_in || exit + 2 != 2 * j_out {
            return decode_err("detour does not return to the vertex it left from");
        }
        let Some(wt) = path.weight.wt.checked_sub(self.offset) else {
            return decode_err("second path is lighter than the detour offset");
        };
        let mut cyc: Vec<VertexId> = Vec::new();
        for &v in &vs[start..end] {
            if cyc.last() != Some(&(v / 2)) {
                cyc.push(v / 2);
            }
        }
        cyc.pop();
        let len = cyc.len() as u32;
        Ok(MinCycle::Found(Cycle::new(PathWeight::new(wt, len), cyc, true)))
    }

    /// `s -> t` paths from cycles through `z`, in the order given.
    pub fn decode_cycles_through(&self, cycles: &CycleSet) -> Result<Vec<SimplePath>> {
        self.expect_kind(GadgetKind::KsispToKsisc)?;
        let z = self.original_n;
        cycles
            .cycles
            .iter()
            .map(|c| {
                let Some(pos) = c.vertices.iter().position(|&v| v == z) else {
                    return decode_err("cycle misses z");
                };
                let mut vs = c.vertices.clone();
                vs.rotate_left(pos);
                vs.remove(0);
                Ok(SimplePath {
                    weight: PathWeight::new(c.weight.wt, c.weight.len - 2),
                    vertices: vs,
                })
            })
            .collect()
    }

    /// Minimum-weight cycle from the first `k` cycles of the gadget. The
    /// k-th fixes the weight; the witness is the first cycle avoiding the
    /// triangles.
    pub fn decode_kth_cycle(&self, first_k: &[Cycle]) -> Result<MinCycle> {
        self.expect_kind(GadgetKind::MwcToKthCycle)?;
        let GadgetQuery::KthCycle { k } = self.query else {
            unreachable!("kind checked")
        };
        let Some(kth) = first_k.get(k - 1) else {
            return Ok(MinCycle::Acyclic);
        };
        let n = self.original_n;
        let Some(witness) = first_k[..k].iter().find(|c| c.vertices.iter().all(|&v| v < n)) else {
            return decode_err("no cycle of the input among the first k");
        };
        if witness.weight.wt != kth.weight.wt {
            return decode_err("k-th cycle and witness disagree on weight");
        }
        Ok(MinCycle::Found(witness.clone()))
    }

    /// Shortest-path matrix of `g`, row-major; `None` where unreachable.
    /// The diagonal holds the trivial paths.
    pub fn decode_second_paths(&self, table: &PTable) -> Result<Vec<Option<SimplePath>>> {
        self.expect_kind(GadgetKind::ApspToSecondApsisp)?;
        let GadgetQuery::SecondPathAllPairs { sources, targets } = &self.query else {
            unreachable!("kind checked")
        };
        let n = self.original_n;
        let mut out = Vec::with_capacity(n * n);
        for (i, &a) in sources.iter().enumerate() {
            for (j, &b) in targets.iter().enumerate() {
                if i == j {
                    out.push(Some(SimplePath {
                        weight: PathWeight::ZERO,
                        vertices: vec![i],
                    }));
                    continue;
                }
                let paths = table.paths(a, b);
                if paths.first().map(|p| p.weight.wt) != Some(0) {
                    return decode_err(format!("shortest a{} -> b{} path does not use the hub", i + 1, j + 1));
                }
                out.push(match paths.get(1) {
                    None => None,
                    Some(p) => {
                        let inner = &p.vertices[1..p.vertices.len() - 1];
                        if inner.first() != Some(&i) || inner.last() != Some(&j) {
                            return decode_err("second path does not run from i to j");
                        }
                        Some(SimplePath {
                            weight: PathWeight::new(p.weight.wt - self.offset, p.weight.len - 2),
                            vertices: inner.to_vec(),
                        })
                    }
                });
            }
        }
        Ok(out)
    }
}

/// Minimum-weight cycle of `g` via the 2nd-path gadget.
pub fn min_cycle_via_second_path(g: &Graph) -> Result<MinCycle> {
    let gadget = gadget_mwc_to_2sisp(g)?;
    let GadgetQuery::SecondPath { source, target } = gadget.query else {
        unreachable!()
    };
    let paths = yen(&gadget.graph, source, target, 2)?;
    gadget.decode_second_path(paths.get(1))
}

/// k shortest simple `s -> t` paths via cycles through an added vertex.
pub fn ksisp_via_ksisc(g: &Graph, s: VertexId, t: VertexId, k: usize) -> Result<Vec<SimplePath>> {
    let gadget = gadget_ksisp_to_ksisc(g, s, t, k)?;
    let cycles = k_sisc(&gadget.graph, gadget.original_n, k)?;
    gadget.decode_cycles_through(&cycles)
}

/// Minimum-weight cycle of `g` via the k-th cycle of the triangle gadget.
pub fn min_cycle_via_kth_cycle(g: &Graph, k: usize, x: VertexId) -> Result<MinCycle> {
    let gadget = gadget_mwc_to_kth_all_sisc(g, k, x)?;
    let cycles = all_sisc(&gadget.graph, k)?;
    gadget.decode_kth_cycle(&cycles)
}

/// All-pairs shortest paths of `g` via 2-APSiSP on the hub gadget.
pub fn apsp_via_second_apsisp(g: &Graph) -> Result<Vec<Option<SimplePath>>> {
    let gadget = gadget_apsp_to_second_apsisp(g)?;
    let table = two_apsisp(&gadget.graph);
    gadget.decode_second_paths(&table)
}
