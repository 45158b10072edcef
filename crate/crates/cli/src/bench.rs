//! Fixed benchmark instances with wall-clock timing.

use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;
use sisp_core::gen::RandomGraphConfig;
use sisp_core::{all_sisc, all_sisp, apsisp, k_sisc, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// 2-APSiSP on n = 300, m ~ 1800.
    Apsisp300,
    /// First 10000 simple paths on n = 100, m ~ 500.
    EnumPaths100,
    /// One instance of every command at small size.
    Small,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
}

fn graph(n: usize, m: usize, seed: u64) -> Graph {
    RandomGraphConfig::with_expected_edges(n, m).generate(seed)
}

fn time(instance: &str, g: &Graph, f: impl FnOnce(&Graph)) -> Timing {
    let start = Instant::now();
    f(g);
    Timing {
        instance: instance.to_string(),
        n: g.vertex_count(),
        m: g.arc_count(),
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run(preset: Preset, seed: u64) -> Vec<Timing> {
    match preset {
        Preset::Apsisp300 => vec![time("apsisp-k2", &graph(300, 1800, seed), |g| {
            apsisp(g, 2).expect("k = 2 is allowed");
        })],
        Preset::EnumPaths100 => vec![time("enum-paths-10000", &graph(100, 500, seed), |g| {
            all_sisp(g, 10_000).expect("k >= 1");
        })],
        Preset::Small => {
            let g = graph(40, 200, seed);
            vec![
                time("apsisp-k2", &g, |g| {
                    apsisp(g, 2).unwrap();
                }),
                time("apsisp-k3", &graph(15, 60, seed), |g| {
                    apsisp(g, 3).unwrap();
                }),
                time("sisc-k10", &g, |g| {
                    k_sisc(g, 0, 10).unwrap();
                }),
                time("enum-paths-1000", &g, |g| {
                    all_sisp(g, 1000).unwrap();
                }),
                time("enum-cycles-100", &g, |g| {
                    all_sisc(g, 100).unwrap();
                }),
            ]
        }
    }
}
