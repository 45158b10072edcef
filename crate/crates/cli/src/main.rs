use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sisp_cli::output::{write_cycle, write_path};
use sisp_cli::{bench, verify};
use sisp_core::oracles::Yen;
use sisp_core::reductions::{
    gadget_apsp_to_second_apsisp, gadget_ksisp_to_ksisc, gadget_mwc_to_2sisp, gadget_mwc_to_kth_all_sisc,
};
use sisp_core::{apsisp, k_avsisc, k_sisc, undirected_k_sisc, AllSisc, AllSisp, GadgetQuery, Graph, VertexId};

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "sisp", version, about = "k simple shortest paths and cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// k simple shortest paths for every ordered pair
    Apsisp {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=5))]
        k: u32,
        /// Edge-list file, or - for stdin
        file: PathBuf,
    },
    /// k simple shortest paths from s to t
    Sisp {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        file: PathBuf,
    },
    /// k simple shortest cycles through v
    Sisc {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        v: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        file: PathBuf,
    },
    /// k simple shortest cycles through every vertex
    Avsisc {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        file: PathBuf,
    },
    /// The k lightest simple paths of the whole graph
    EnumPaths {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        file: PathBuf,
    },
    /// The k lightest simple cycles of a directed graph
    EnumCycles {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        file: PathBuf,
    },
    /// Build a reduction gadget; the graph goes to stdout, the query to a side file
    Gadget {
        #[arg(long = "type", value_enum)]
        kind: GadgetType,
        file: PathBuf,
        /// k for ksisp-ksisc and mwc-kth-sisc
        #[arg(short, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Source for ksisp-ksisc
        #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// Target for ksisp-ksisc (default: last vertex)
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        t: Option<u32>,
        /// Attachment vertex for mwc-kth-sisc
        #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        x: u32,
        /// Where to write the query description (default: FILE.gadget.json)
        #[arg(long)]
        side_file: Option<PathBuf>,
    },
    /// Cross-check all algorithms against brute force on random graphs
    Verify {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(2..=10))]
        max_n: u32,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        /// Restrict to one or more suites (default: all)
        #[arg(long, value_enum)]
        suite: Vec<verify::Suite>,
    },
    /// Time a fixed benchmark instance
    Bench {
        #[arg(long, value_enum)]
        preset: bench::Preset,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetType {
    #[value(name = "mwc-2sisp")]
    Mwc2Sisp,
    #[value(name = "ksisp-ksisc")]
    KsispKsisc,
    #[value(name = "mwc-kth-sisc")]
    MwcKthSisc,
    #[value(name = "apsp-2apsisp")]
    Apsp2Apsisp,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum QueryRecord {
    SecondPath { source: usize, target: usize },
    CyclesThrough { vertex: usize, k: usize },
    KthCycle { k: usize },
    SecondPathAllPairs { sources: Vec<usize>, targets: Vec<usize> },
}

#[derive(Serialize)]
struct SideFile<'a> {
    #[serde(rename = "type")]
    kind: &'a str,
    query: QueryRecord,
    offset: u64,
    original_vertices: usize,
    names: &'a [String],
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    Graph::parse(&text).with_context(|| format!("{}", path.display()))
}

fn vertex(g: &Graph, label: u32, flag: &str) -> anyhow::Result<VertexId> {
    let n = g.vertex_count();
    if label as usize > n {
        bail!("-{flag} {label} is out of range: the graph has {n} vertices");
    }
    Ok(label as usize - 1)
}

fn one_based(vs: &[VertexId]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn run(command: Command, out: &mut impl Write) -> anyhow::Result<u8> {
    match command {
        Command::Apsisp { k, file } => {
            let g = read_graph(&file)?;
            let table = apsisp(&g, k as usize)?;
            for (x, y) in table.pairs() {
                for (rank, p) in table.paths(x, y).iter().enumerate() {
                    write_path(out, (x, y), rank + 1, p)?;
                }
            }
        }
        Command::Sisp { s, t, k, file } => {
            let g = read_graph(&file)?;
            let (s, t) = (vertex(&g, s, "s")?, vertex(&g, t, "t")?);
            for (rank, p) in Yen::new(&g, s, t)?.take(k as usize).enumerate() {
                write_path(out, (s, t), rank + 1, &p)?;
            }
        }
        Command::Sisc { v, k, file } => {
            let g = read_graph(&file)?;
            let v = vertex(&g, v, "v")?;
            let set = if g.is_directed() {
                k_sisc(&g, v, k as usize)?
            } else {
                undirected_k_sisc(&g, v, k as usize)?
            };
            for (rank, c) in set.cycles.iter().enumerate() {
                write_cycle(out, v, rank + 1, c)?;
            }
        }
        Command::Avsisc { k, file } => {
            let g = read_graph(&file)?;
            let sets = if g.is_directed() {
                k_avsisc(&g, k as usize)?
            } else {
                g.vertices()
                    .map(|x| undirected_k_sisc(&g, x, k as usize))
                    .collect::<Result<_, _>>()?
            };
            for set in sets {
                for (rank, c) in set.cycles.iter().enumerate() {
                    write_cycle(out, set.anchor, rank + 1, c)?;
                }
            }
        }
        Command::EnumPaths { k, file } => {
            let g = read_graph(&file)?;
            for (rank, p) in AllSisp::new(&g).take(k as usize).enumerate() {
                write_path(out, (p.first(), p.last()), rank + 1, &p)?;
            }
        }
        Command::EnumCycles { k, file } => {
            let g = read_graph(&file)?;
            for (rank, c) in AllSisc::new(&g)?.take(k as usize).enumerate() {
                write_cycle(out, c.vertices[0], rank + 1, &c)?;
            }
        }
        Command::Gadget {
            kind,
            file,
            k,
            s,
            t,
            x,
            side_file,
        } => {
            let g = read_graph(&file)?;
            let gadget = match kind {
                GadgetType::Mwc2Sisp => gadget_mwc_to_2sisp(&g)?,
                GadgetType::KsispKsisc => {
                    let t = t.unwrap_or(g.vertex_count() as u32);
                    gadget_ksisp_to_ksisc(&g, vertex(&g, s, "s")?, vertex(&g, t, "t")?, k as usize)?
                }
                GadgetType::MwcKthSisc => gadget_mwc_to_kth_all_sisc(&g, k as usize, vertex(&g, x, "x")?)?,
                GadgetType::Apsp2Apsisp => gadget_apsp_to_second_apsisp(&g)?,
            };
            let query = match &gadget.query {
                GadgetQuery::SecondPath { source, target } => QueryRecord::SecondPath {
                    source: source + 1,
                    target: target + 1,
                },
                GadgetQuery::CyclesThrough { vertex, k } => QueryRecord::CyclesThrough { vertex: vertex + 1, k: *k },
                GadgetQuery::KthCycle { k } => QueryRecord::KthCycle { k: *k },
                GadgetQuery::SecondPathAllPairs { sources, targets } => QueryRecord::SecondPathAllPairs {
                    sources: one_based(sources),
                    targets: one_based(targets),
                },
            };
            let side = SideFile {
                kind: gadget.kind.name(),
                query,
                offset: gadget.offset,
                original_vertices: gadget.original_n,
                names: &gadget.names,
            };
            let side_path = side_file.unwrap_or_else(|| {
                let mut p = file.clone().into_os_string();
                p.push(".gadget.json");
                p.into()
            });
            let json = serde_json::to_string_pretty(&side)? + "\n";
            fs::write(&side_path, json).with_context(|| format!("cannot write {}", side_path.display()))?;
            out.write_all(gadget.graph.to_edge_list().as_bytes())?;
        }
        Command::Verify { max_n, seeds, suite } => {
            let suites = if suite.is_empty() { verify::Suite::ALL.to_vec() } else { suite };
            let summary = verify::run(&suites, max_n as usize, seeds);
            if let Some(f) = summary.failures.first() {
                writeln!(out, "{f}")?;
                writeln!(out, "{} of {} checks failed", summary.failures.len(), summary.checked)?;
                return Ok(EXIT_VERIFY);
            }
            writeln!(out, "{} checks passed", summary.checked)?;
        }
        Command::Bench { preset, seed } => {
            for t in bench::run(preset, seed) {
                serde_json::to_writer(&mut *out, &t)?;
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(code)
}
