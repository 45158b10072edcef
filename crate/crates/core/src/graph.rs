//! Immutable weighted graph with dense `0..n` vertex ids.
//!
//! Undirected graphs keep `directed == false` and store each edge as two
//! opposite arcs, so every algorithm can walk `out_arcs`/`in_arcs` without
//! caring about the flag. Code whose semantics differ on undirected input
//! (cycle enumeration) checks [`Graph::is_directed`] itself.
//!
//! The text format numbers vertices from 1; the conversion happens only in
//! [`Graph::parse`] and [`Graph::to_edge_list`].

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::weight::Weight;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: Weight,
}

impl Edge {
    pub fn new(tail: VertexId, head: VertexId, weight: Weight) -> Self {
        Edge { tail, head, weight }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("missing `d <n> <m>` or `u <n> <m>` header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("negative weight {0}")]
    NegativeWeight(i128),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(u64, u64),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u64, n: usize },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    arcs: Vec<Edge>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a directed graph. Arcs are reordered by `(tail, head)`.
    pub fn directed(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        Self::build(n, true, edges.into_iter().collect())
    }

    /// Builds an undirected graph; each edge is stored as two opposite arcs.
    pub fn undirected(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut arcs = Vec::new();
        for e in edges {
            arcs.push(e);
            arcs.push(Edge::new(e.head, e.tail, e.weight));
        }
        Self::build(n, false, arcs)
    }

    /// Shorthand for tests and examples: directed graph from `(tail, head, weight)` triples.
    pub fn from_triples(n: usize, triples: &[(VertexId, VertexId, Weight)]) -> Result<Self, GraphError> {
        Self::directed(n, triples.iter().map(|&(u, v, w)| Edge::new(u, v, w)))
    }

    fn build(n: usize, directed: bool, mut arcs: Vec<Edge>) -> Result<Self, GraphError> {
        for e in &arcs {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.tail == e.head {
                return Err(GraphError::SelfLoop(e.tail));
            }
        }
        arcs.sort_unstable_by_key(|e| (e.tail, e.head));
        if let Some(w) = arcs.windows(2).find(|w| (w[0].tail, w[0].head) == (w[1].tail, w[1].head)) {
            let (u, v) = if directed || w[0].tail < w[0].head {
                (w[0].tail, w[0].head)
            } else {
                (w[0].head, w[0].tail)
            };
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (id, e) in arcs.iter().enumerate() {
            out_adj[e.tail].push(id);
            in_adj[e.head].push(id);
        }
        // out lists are already sorted by head; in lists by tail.
        Ok(Graph {
            n,
            directed,
            arcs,
            out_adj,
            in_adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Number of edges as the user sees them (undirected edges count once).
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.arcs.len()
        } else {
            self.arcs.len() / 2
        }
    }

    /// Number of stored arcs.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Edge] {
        &self.arcs
    }

    #[inline]
    pub fn arc(&self, id: EdgeId) -> &Edge {
        &self.arcs[id]
    }

    #[inline]
    pub fn out_arcs(&self, v: VertexId) -> &[EdgeId] {
        &self.out_adj[v]
    }

    #[inline]
    pub fn in_arcs(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v]
    }

    /// Arc id of `tail -> head`, if present.
    pub fn find_arc(&self, tail: VertexId, head: VertexId) -> Option<EdgeId> {
        let out = self.out_adj.get(tail)?;
        out.binary_search_by_key(&head, |&e| self.arcs[e].head)
            .ok()
            .map(|i| out[i])
    }

    pub fn max_weight(&self) -> Weight {
        self.arcs.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// Weight of the walk through `vertices`, or `None` if some hop is not an arc.
    pub fn walk_weight(&self, vertices: &[VertexId]) -> Option<Weight> {
        vertices
            .windows(2)
            .map(|w| self.find_arc(w[0], w[1]).map(|e| self.arcs[e].weight))
            .sum()
    }

    /// Directed graph on the same vertex set keeping only arcs accepted by `keep`.
    pub fn filter_arcs(&self, mut keep: impl FnMut(&Edge) -> bool) -> Graph {
        let arcs: Vec<Edge> = self.arcs.iter().copied().filter(|e| keep(e)).collect();
        Self::build(self.n, true, arcs).expect("subgraph of a valid graph is valid")
    }

    /// `G - I_x`: every arc entering `x` removed.
    pub fn without_in_arcs(&self, x: VertexId) -> Graph {
        self.filter_arcs(|e| e.head != x)
    }

    /// Directed view: undirected graphs become their bidirected encoding.
    pub fn to_directed(&self) -> Graph {
        Graph {
            directed: true,
            ..self.clone()
        }
    }

    /// Parses the edge-list text format.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(bool, usize, usize, usize)> = None;
        let mut edges = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let err = |line: usize, kind| ParseError { line, kind };

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "d" | "u" => {
                    if header.is_some() {
                        return Err(err(line_no, ParseErrorKind::DuplicateHeader));
                    }
                    let [_, n, m] = fields[..] else {
                        return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
                    };
                    let (Ok(n), Ok(m)) = (n.parse::<usize>(), m.parse::<usize>()) else {
                        return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
                    };
                    header = Some((fields[0] == "d", n, m, line_no));
                }
                "e" => {
                    let Some((directed, n, _, _)) = header else {
                        return Err(err(line_no, ParseErrorKind::MissingHeader));
                    };
                    let [_, u, v, w] = fields[..] else {
                        return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
                    };
                    let (Ok(u), Ok(v), Ok(w)) = (u.parse::<u64>(), v.parse::<u64>(), w.parse::<i128>()) else {
                        return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
                    };
                    for x in [u, v] {
                        if x == 0 || x > n as u64 {
                            return Err(err(line_no, ParseErrorKind::VertexOutOfRange { vertex: x, n }));
                        }
                    }
                    if w < 0 {
                        return Err(err(line_no, ParseErrorKind::NegativeWeight(w)));
                    }
                    let Ok(w) = Weight::try_from(w) else {
                        return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
                    };
                    if u == v {
                        return Err(err(line_no, ParseErrorKind::SelfLoop(u)));
                    }
                    let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
                    if !seen.insert(key) {
                        return Err(err(line_no, ParseErrorKind::DuplicateEdge(u, v)));
                    }
                    edges.push(Edge::new(u as usize - 1, v as usize - 1, w));
                }
                _ => return Err(err(line_no, ParseErrorKind::Malformed(line.to_string()))),
            }
        }

        let Some((directed, n, m, header_line)) = header else {
            return Err(err(text.lines().count().max(1), ParseErrorKind::MissingHeader));
        };
        if edges.len() != m {
            return Err(err(
                header_line,
                ParseErrorKind::EdgeCountMismatch {
                    expected: m,
                    found: edges.len(),
                },
            ));
        }
        let g = if directed {
            Graph::directed(n, edges)
        } else {
            Graph::undirected(n, edges)
        };
        // every condition build() checks was already checked per line
        Ok(g.expect("validated while parsing"))
    }

    /// Serializes to the edge-list format, edges sorted by `(tail, head)`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let tag = if self.directed { 'd' } else { 'u' };
        writeln!(out, "{tag} {} {}", self.n, self.edge_count()).unwrap();
        for e in &self.arcs {
            if self.directed || e.tail < e.head {
                writeln!(out, "e {} {} {}", e.tail + 1, e.head + 1, e.weight).unwrap();
            }
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl std::str::FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const G_TRI: &str = "# triangle\nd 3 3\ne 1 2 1\ne 2 3 1\ne 3 1 1\n";

    #[test]
    fn parses_triangle() {
        let g = Graph::parse(G_TRI).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_directed());
        assert_eq!(g.find_arc(2, 0).map(|e| g.arc(e).weight), Some(1));
        assert_eq!(g.find_arc(0, 2), None);
    }

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = Graph::parse(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(kind("d 2 1\ne 1 1 5\n"), (2, ParseErrorKind::SelfLoop(1)));
    }

    #[test]
    fn rejects_negative_weight() {
        assert_eq!(kind("d 2 1\ne 1 2 -4\n"), (2, ParseErrorKind::NegativeWeight(-4)));
    }

    #[test]
    fn rejects_duplicates_and_range() {
        assert_eq!(kind("d 2 2\ne 1 2 1\ne 1 2 3\n"), (3, ParseErrorKind::DuplicateEdge(1, 2)));
        assert_eq!(kind("u 2 2\ne 1 2 1\ne 2 1 3\n"), (3, ParseErrorKind::DuplicateEdge(2, 1)));
        assert_eq!(
            kind("d 2 1\ne 1 3 1\n"),
            (2, ParseErrorKind::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(
            kind("d 2 1\ne 0 1 1\n"),
            (2, ParseErrorKind::VertexOutOfRange { vertex: 0, n: 2 })
        );
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(kind("d 2 1\ne 1 2\n").1, ParseErrorKind::Malformed(_)));
        assert!(matches!(kind("d 2 1\ne 1 2 1.5\n").1, ParseErrorKind::Malformed(_)));
        assert!(matches!(kind("x\n").1, ParseErrorKind::Malformed(_)));
        assert_eq!(kind("e 1 2 1\n"), (1, ParseErrorKind::MissingHeader));
        assert_eq!(
            kind("d 2 2\ne 1 2 1\n"),
            (1, ParseErrorKind::EdgeCountMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn undirected_is_bidirected() {
        let g = Graph::parse("u 3 2\ne 1 2 4\ne 3 2 1\n").unwrap();
        assert!(!g.is_directed());
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.arc_count(), 4);
        assert!(g.find_arc(1, 0).is_some() && g.find_arc(1, 2).is_some());
        assert_eq!(g.to_edge_list(), "u 3 2\ne 1 2 4\ne 2 3 1\n");
    }

    #[test]
    fn without_in_arcs_drops_only_incoming() {
        let g = Graph::parse(G_TRI).unwrap();
        let h = g.without_in_arcs(0);
        assert_eq!(h.arc_count(), 2);
        assert!(h.in_arcs(0).is_empty());
        assert_eq!(h.out_arcs(0).len(), 1);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..7, any::<bool>()).prop_flat_map(|(n, directed)| {
            proptest::collection::vec(((0..n), (0..n), 0u64..20), 0..20).prop_map(move |raw| {
                let mut seen = std::collections::HashSet::new();
                let edges: Vec<Edge> = raw
                    .into_iter()
                    .filter(|&(u, v, _)| u != v)
                    .filter(|&(u, v, _)| seen.insert(if directed { (u, v) } else { (u.min(v), u.max(v)) }))
                    .map(|(u, v, w)| Edge::new(u, v, w))
                    .collect();
                if directed {
                    Graph::directed(n, edges).unwrap()
                } else {
                    Graph::undirected(n, edges).unwrap()
                }
            })
        })
    }

    proptest! {
        #[test]
        fn serialize_parse_roundtrip(g in arb_graph()) {
            let text = g.to_edge_list();
            let back = Graph::parse(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.to_edge_list(), text);
        }

        #[test]
        fn adjacency_matches_arcs(g in arb_graph()) {
            for v in g.vertices() {
                for &e in g.out_arcs(v) { prop_assert_eq!(g.arc(e).tail, v); }
                for &e in g.in_arcs(v) { prop_assert_eq!(g.arc(e).head, v); }
            }
            let total_out: usize = g.vertices().map(|v| g.out_arcs(v).len()).sum();
            prop_assert_eq!(total_out, g.arc_count());
        }
    }
}
