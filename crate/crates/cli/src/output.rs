//! JSON-lines records. Vertex labels are 1-based, as in the input format.

use std::io::{self, Write};

use serde::Serialize;
use sisp_core::{Cycle, SimplePath, VertexId, Weight};

#[derive(Serialize)]
struct PathRecord<'a> {
    pair: [usize; 2],
    rank: usize,
    weight: Weight,
    length: u32,
    vertices: &'a [usize],
}

#[derive(Serialize)]
struct CycleRecord<'a> {
    anchor: usize,
    rank: usize,
    weight: Weight,
    length: u32,
    vertices: &'a [usize],
}

fn one_based(vs: &[VertexId]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

pub fn write_path(out: &mut impl Write, pair: (VertexId, VertexId), rank: usize, p: &SimplePath) -> io::Result<()> {
    let vertices = one_based(&p.vertices);
    let rec = PathRecord {
        pair: [pair.0 + 1, pair.1 + 1],
        rank,
        weight: p.weight.wt,
        length: p.weight.len,
        vertices: &vertices,
    };
    serde_json::to_writer(&mut *out, &rec)?;
    out.write_all(b"\n")
}

pub fn write_cycle(out: &mut impl Write, anchor: VertexId, rank: usize, c: &Cycle) -> io::Result<()> {
    let vertices = one_based(&c.vertices);
    let rec = CycleRecord {
        anchor: anchor + 1,
        rank,
        weight: c.weight.wt,
        length: c.weight.len,
        vertices: &vertices,
    };
    serde_json::to_writer(&mut *out, &rec)?;
    out.write_all(b"\n")
}
