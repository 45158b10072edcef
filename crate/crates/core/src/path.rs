//! Path records.
//!
//! Algorithms that build paths one edge at a time store them in a
//! [`PathArena`]: each record holds its end vertices, end arcs, weight and
//! handles to its left subpath (last arc dropped) and right subpath (first
//! arc dropped). A record created by prepending knows only its right subpath,
//! one created by appending only its left; either handle is enough to
//! materialize the vertex sequence.
//!
//! [`SimplePath`] is the materialized form handed to callers. Its derived
//! order is the crate-wide total order `(wt, len, vertex sequence)`.

use std::fmt;

use serde::Serialize;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::weight::PathWeight;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SimplePath {
    pub weight: PathWeight,
    pub vertices: Vec<VertexId>,
}

impl SimplePath {
    /// Builds the path through `vertices`, or `None` if a hop is missing.
    pub fn from_vertices(g: &Graph, vertices: Vec<VertexId>) -> Option<Self> {
        let wt = g.walk_weight(&vertices)?;
        let len = vertices.len().saturating_sub(1) as u32;
        Some(SimplePath {
            weight: PathWeight::new(wt, len),
            vertices,
        })
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths have at least one vertex")
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_simple(&self) -> bool {
        is_simple(&self.vertices)
    }
}

impl fmt::Display for SimplePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "<{}> wt {}", labels.join(","), self.weight.wt)
    }
}

/// No vertex repeats.
pub fn is_simple(vertices: &[VertexId]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(vertices.len());
    vertices.iter().all(|v| seen.insert(*v))
}

/// A simple cycle, rotated to start at its minimum vertex. For undirected
/// graphs the traversal direction is the one whose second vertex is smaller.
/// The closing arc back to `vertices[0]` is implicit; `weight.len` counts it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cycle {
    pub weight: PathWeight,
    pub vertices: Vec<VertexId>,
}

impl Cycle {
    /// Canonicalizes a closed walk given as its vertex list (no repeated
    /// closing vertex).
    pub fn new(weight: PathWeight, mut vertices: Vec<VertexId>, directed: bool) -> Self {
        let pos = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(pos);
        if !directed && vertices.len() > 2 && vertices[vertices.len() - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Cycle { weight, vertices }
    }

    /// Cycle through `vertices` in `g`, or `None` if some arc is missing.
    pub fn from_vertices(g: &Graph, vertices: Vec<VertexId>) -> Option<Self> {
        let mut closed = vertices.clone();
        closed.push(*vertices.first()?);
        let wt = g.walk_weight(&closed)?;
        let len = vertices.len() as u32;
        Some(Cycle::new(PathWeight::new(wt, len), vertices, g.is_directed()))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_simple(&self) -> bool {
        is_simple(&self.vertices)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({}) wt {}", labels.join(","), self.weight.wt)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathId(u32);

impl PathId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord {
    pub first: VertexId,
    pub last: VertexId,
    pub first_arc: Option<EdgeId>,
    pub last_arc: Option<EdgeId>,
    pub weight: PathWeight,
    pub left: Option<PathId>,
    pub right: Option<PathId>,
}

impl PathRecord {
    pub fn edge_count(&self) -> u32 {
        self.weight.len
    }
}

#[derive(Debug, Clone, Default)]
pub struct PathArena {
    records: Vec<PathRecord>,
}

impl PathArena {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    #[inline]
    pub fn get(&self, id: PathId) -> &PathRecord {
        &self.records[id.index()]
    }

    fn push(&mut self, r: PathRecord) -> PathId {
        let id = PathId(u32::try_from(self.records.len()).expect("path arena overflow"));
        self.records.push(r);
        id
    }

    /// The single-vertex path `<v>`.
    pub fn trivial(&mut self, v: VertexId) -> PathId {
        self.push(PathRecord {
            first: v,
            last: v,
            first_arc: None,
            last_arc: None,
            weight: PathWeight::ZERO,
            left: None,
            right: None,
        })
    }

    /// The one-arc path along `e`.
    pub fn edge(&mut self, g: &Graph, e: EdgeId) -> PathId {
        let arc = g.arc(e);
        self.push(PathRecord {
            first: arc.tail,
            last: arc.head,
            first_arc: Some(e),
            last_arc: Some(e),
            weight: PathWeight::ZERO.extend(arc.weight),
            left: None,
            right: None,
        })
    }

    /// `e ∘ right`. The head of `e` must be the first vertex of `right`.
    pub fn prepend(&mut self, g: &Graph, e: EdgeId, right: PathId) -> PathId {
        let arc = *g.arc(e);
        let r = self.get(right).clone();
        debug_assert_eq!(arc.head, r.first);
        if r.edge_count() == 0 {
            return self.edge(g, e);
        }
        self.push(PathRecord {
            first: arc.tail,
            last: r.last,
            first_arc: Some(e),
            last_arc: r.last_arc,
            weight: PathWeight::new(r.weight.wt + arc.weight, r.weight.len + 1),
            left: None,
            right: Some(right),
        })
    }

    /// `left ∘ e`. The tail of `e` must be the last vertex of `left`.
    pub fn append(&mut self, g: &Graph, left: PathId, e: EdgeId) -> PathId {
        let arc = *g.arc(e);
        let l = self.get(left).clone();
        debug_assert_eq!(arc.tail, l.last);
        if l.edge_count() == 0 {
            return self.edge(g, e);
        }
        self.push(PathRecord {
            first: l.first,
            last: arc.head,
            first_arc: l.first_arc,
            last_arc: Some(e),
            weight: l.weight.extend(arc.weight),
            left: Some(left),
            right: None,
        })
    }

    /// The path whose left subpath is `left` and right subpath is `right`.
    /// Both must have at least one arc and overlap in all but their end arcs.
    pub fn join(&mut self, g: &Graph, left: PathId, right: PathId) -> PathId {
        let l = self.get(left).clone();
        let r = self.get(right).clone();
        let last_arc = r.last_arc.expect("right subpath has an arc");
        debug_assert!(l.edge_count() >= 1 && l.edge_count() == r.edge_count());
        self.push(PathRecord {
            first: l.first,
            last: r.last,
            first_arc: l.first_arc,
            last_arc: Some(last_arc),
            weight: l.weight.extend(g.arc(last_arc).weight),
            left: Some(left),
            right: Some(right),
        })
    }

    /// Builds a right-linked chain for an explicit vertex sequence.
    pub fn from_vertices(&mut self, g: &Graph, vertices: &[VertexId]) -> Option<PathId> {
        let (&last, rest) = vertices.split_last()?;
        let mut id = self.trivial(last);
        let mut head = last;
        for &v in rest.iter().rev() {
            let e = g.find_arc(v, head)?;
            id = self.prepend(g, e, id);
            head = v;
        }
        Some(id)
    }

    /// Materializes the vertex sequence.
    pub fn vertices(&self, id: PathId) -> Vec<VertexId> {
        let mut front = Vec::new();
        let mut back = Vec::new();
        let mut cur = id;
        loop {
            let r = self.get(cur);
            match r.edge_count() {
                0 => {
                    front.push(r.first);
                    break;
                }
                1 => {
                    front.push(r.first);
                    back.push(r.last);
                    break;
                }
                _ => {
                    if let Some(right) = r.right {
                        front.push(r.first);
                        cur = right;
                    } else {
                        back.push(r.last);
                        cur = r.left.expect("record of two or more arcs has a subpath");
                    }
                }
            }
        }
        front.extend(back.into_iter().rev());
        front
    }

    pub fn to_simple_path(&self, id: PathId) -> SimplePath {
        SimplePath {
            weight: self.get(id).weight,
            vertices: self.vertices(id),
        }
    }

    pub fn is_simple(&self, id: PathId) -> bool {
        is_simple(&self.vertices(id))
    }
}
