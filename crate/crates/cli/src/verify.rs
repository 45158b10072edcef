//! Randomized cross-checks of every algorithm against the exhaustive
//! oracles. A failure carries the seed and the graph, and rerunning the same
//! seed rebuilds the same graph.

use std::fmt;

use clap::ValueEnum;
use rayon::prelude::*;
use sisp_core::apsisp::{apsisp_traced, compute_q2, ApsispConfig, ComputeStats};
use sisp_core::gen::{complete_digraph, RandomGraphConfig};
use sisp_core::oracles::{brute_all_paths, brute_cycles, brute_paths, min_weight_cycle_brute, min_weight_cycle_split, yen};
use sisp_core::reductions::{
    apsp_via_second_apsisp, ksisp_via_ksisc, min_cycle_via_kth_cycle, min_cycle_via_second_path,
};
use sisp_core::sssp::{sssp, sssp_filtered};
use sisp_core::{k_avsisc, k_sisc, undirected_k_sisc, AllSisc, AllSisp, Graph, SimplePath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    /// k-APSiSP for k = 2, 3, 4 against brute force, with counter bounds.
    Apsisp,
    /// Second entries of Q_2 against single-arc removal.
    Q2,
    /// Full path enumeration against brute force.
    EnumPaths,
    /// Full cycle enumeration against brute force.
    EnumCycles,
    /// Cycles through a vertex, directed and undirected.
    Cycles,
    /// Reduction round trips.
    Gadgets,
    /// Yen and the split-vertex min cycle against brute force.
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Apsisp,
        Suite::Q2,
        Suite::EnumPaths,
        Suite::EnumCycles,
        Suite::Cycles,
        Suite::Gadgets,
        Suite::Oracles,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub suite: Suite,
    pub seed: u64,
    pub graph: Graph,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} failed at seed {}: {}", self.suite, self.seed, self.message)?;
        write!(f, "{}", self.graph)
    }
}

#[derive(Debug, Default)]
pub struct Summary {
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub stats: Vec<ComputeStats>,
}

/// Vertex count for a seed: cycles through `3..=max_n`.
pub fn seed_size(seed: u64, max_n: usize) -> usize {
    if max_n <= 3 {
        return max_n;
    }
    3 + (seed % (max_n as u64 - 2)) as usize
}

/// The standard generator for even seeds, the zero-weight variant for odd.
pub fn seed_graph(seed: u64, max_n: usize) -> Graph {
    let n = seed_size(seed, max_n);
    let cfg = if seed.is_multiple_of(2) {
        RandomGraphConfig::standard(n)
    } else {
        RandomGraphConfig::zero_weight_variant(n)
    };
    cfg.generate(seed)
}

/// Undirected counterpart, a little denser so cycles are common.
pub fn seed_graph_undirected(seed: u64, max_n: usize) -> Graph {
    let n = seed_size(seed, max_n);
    RandomGraphConfig {
        edge_prob: 0.5,
        ..RandomGraphConfig::zero_weight_variant(n)
    }
    .undirected()
    .generate(seed)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn weights(ps: &[SimplePath]) -> Vec<(u64, u32)> {
    ps.iter().map(|p| (p.weight.wt, p.weight.len)).collect()
}

pub fn check_apsisp(g: &Graph, k: usize) -> Result<Vec<ComputeStats>, String> {
    let mut trace = Vec::new();
    let table = apsisp_traced(g, k, &ApsispConfig::default(), &mut trace).map_err(|e| e.to_string())?;
    for (x, y) in table.pairs() {
        let got = table.paths(x, y);
        let want = brute_paths(g, x, y, k).map_err(|e| e.to_string())?;
        ensure(weights(&got) == weights(&want), || {
            format!("k = {k}, pair ({}, {}): weights {:?}, expected {:?}", x + 1, y + 1, weights(&got), weights(&want))
        })?;
        ensure(got == want, || format!("k = {k}, pair ({}, {}): path sequences differ", x + 1, y + 1))?;
    }
    for s in &trace {
        let v = s.violations();
        ensure(v.is_empty(), || format!("k = {k}: {}", v.join("; ")))?;
    }
    Ok(trace)
}

pub fn check_q2(g: &Graph) -> Result<(), String> {
    let q = compute_q2(g);
    for (x, y) in q.pairs() {
        let got = q.paths(x, y);
        let all = brute_paths(g, x, y, usize::MAX).map_err(|e| e.to_string())?;
        let Some(first) = all.first() else {
            ensure(got.is_empty(), || format!("pair ({}, {}) has no path", x + 1, y + 1))?;
            continue;
        };
        ensure(got.first() == Some(first), || format!("pair ({}, {}): wrong first entry", x + 1, y + 1))?;
        let (a, b) = (first.vertices[0], first.vertices[1]);
        let arc = g.find_arc(a, b).expect("path arc");
        let removed = sssp_filtered(g, x, |e| e != arc).dist(y);
        let avoiding = all.iter().find(|p| p.vertices[1] != b);
        ensure(got.get(1).map(|p| p.weight) == removed, || {
            format!("pair ({}, {}): second entry disagrees with arc removal", x + 1, y + 1)
        })?;
        ensure(got.get(1) == avoiding, || format!("pair ({}, {}): second entry is not the canonical detour", x + 1, y + 1))?;
    }
    Ok(())
}

pub fn check_enum_paths(g: &Graph) -> Result<(), String> {
    let want = brute_all_paths(g).map_err(|e| e.to_string())?;
    let mut it = AllSisp::new(g);
    let got: Vec<SimplePath> = it.by_ref().collect();
    ensure(got.len() == want.len(), || format!("{} paths emitted, {} exist", got.len(), want.len()))?;
    ensure(got == want, || "emission order or content differs".into())?;
    let bound = g.vertex_count().saturating_sub(2);
    let seen = it.stats().max_extension_set;
    ensure(seen <= bound, || format!("extension set of size {seen} exceeds n - 2 = {bound}"))
}

pub fn check_enum_cycles(g: &Graph) -> Result<(), String> {
    let want = brute_cycles(g, usize::MAX, None).map_err(|e| e.to_string())?;
    let got: Vec<_> = AllSisc::new(g).map_err(|e| e.to_string())?.collect();
    ensure(got.len() == want.len(), || format!("{} cycles emitted, {} exist", got.len(), want.len()))?;
    ensure(got == want, || "emission order or content differs".into())
}

pub fn check_cycles(g: &Graph) -> Result<(), String> {
    for z in g.vertices() {
        for k in 1..=4 {
            let got = if g.is_directed() {
                k_sisc(g, z, k)
            } else {
                undirected_k_sisc(g, z, k)
            }
            .map_err(|e| e.to_string())?;
            let want = brute_cycles(g, k, Some(z)).map_err(|e| e.to_string())?;
            ensure(got.weights() == want.iter().map(|c| c.weight).collect::<Vec<_>>(), || {
                format!("vertex {}, k = {k}: cycle weights differ", z + 1)
            })?;
            ensure(got.cycles == want, || format!("vertex {}, k = {k}: cycles differ", z + 1))?;
        }
    }
    if g.is_directed() {
        for (x, set) in k_avsisc(g, 2).map_err(|e| e.to_string())?.into_iter().enumerate() {
            let want = brute_cycles(g, 2, Some(x)).map_err(|e| e.to_string())?;
            ensure(set.weights() == want.iter().map(|c| c.weight).collect::<Vec<_>>(), || {
                format!("2-AVSiSC at vertex {}: weights differ", x + 1)
            })?;
        }
    }
    Ok(())
}

pub fn check_gadgets(g: &Graph, seed: u64) -> Result<(), String> {
    let n = g.vertex_count();
    let want = min_weight_cycle_brute(g).map(|c| c.weight.wt);
    let err = |e: sisp_core::Error| e.to_string();

    let got = min_cycle_via_second_path(g).map_err(err)?;
    ensure(got.weight() == want, || format!("2nd-path gadget decodes {:?}, expected {want:?}", got.weight()))?;

    let k = 2 + (seed % 3) as usize;
    let x = (seed as usize) % n;
    let got = min_cycle_via_kth_cycle(g, k, x).map_err(err)?;
    ensure(got.weight() == want, || format!("k-th cycle gadget decodes {:?}, expected {want:?}", got.weight()))?;

    let matrix = apsp_via_second_apsisp(g).map_err(err)?;
    for s in g.vertices() {
        let tree = sssp(g, s);
        for t in g.vertices() {
            let got = matrix[s * n + t].as_ref().map(|p| p.weight.wt);
            let want = tree.dist(t).map(|d| d.wt);
            ensure(got == want, || format!("APSP gadget gives {got:?} for ({}, {}), expected {want:?}", s + 1, t + 1))?;
        }
    }

    let (s, t) = (0, n - 1);
    if s != t {
        let got = ksisp_via_ksisc(g, s, t, 3).map_err(err)?;
        let want = brute_paths(g, s, t, 3).map_err(err)?;
        ensure(weights(&got) == weights(&want), || "path-to-cycle gadget weights differ".into())?;
    }
    Ok(())
}

pub fn check_oracles(g: &Graph) -> Result<(), String> {
    for s in g.vertices() {
        for t in g.vertices().filter(|&t| t != s) {
            let a = yen(g, s, t, 4).map_err(|e| e.to_string())?;
            let b = brute_paths(g, s, t, 4).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("Yen and brute force disagree on ({}, {})", s + 1, t + 1))?;
        }
    }
    let a = min_weight_cycle_brute(g).map(|c| c.weight);
    let b = min_weight_cycle_split(g).map(|c| c.weight);
    ensure(a == b, || format!("min cycle strategies disagree: {a:?} vs {b:?}"))
}

/// Runs one suite on the graph(s) derived from `seed`.
pub fn check_seed(suite: Suite, seed: u64, max_n: usize) -> Result<Vec<ComputeStats>, Box<Failure>> {
    let g = match suite {
        Suite::EnumPaths | Suite::EnumCycles if seed.is_multiple_of(5) => {
            complete_digraph(seed_size(seed, max_n).min(5), 10, seed)
        }
        _ => seed_graph(seed, max_n),
    };
    let fail = |g: &Graph, message: String| {
        Box::new(Failure {
            suite,
            seed,
            graph: g.clone(),
            message,
        })
    };
    match suite {
        Suite::Apsisp => {
            let mut all = Vec::new();
            for k in 2..=4 {
                all.extend(check_apsisp(&g, k).map_err(|m| fail(&g, m))?);
            }
            return Ok(all);
        }
        Suite::Q2 => check_q2(&g),
        Suite::EnumPaths => check_enum_paths(&g),
        Suite::EnumCycles => check_enum_cycles(&g),
        Suite::Cycles => {
            check_cycles(&g).map_err(|m| fail(&g, m))?;
            let u = seed_graph_undirected(seed, max_n);
            check_cycles(&u).map_err(|m| fail(&u, m))?;
            Ok(())
        }
        Suite::Gadgets => check_gadgets(&g, seed),
        Suite::Oracles => check_oracles(&g),
    }
    .map_err(|m| fail(&g, m))?;
    Ok(Vec::new())
}

/// Seeds `0..seeds` for every suite, in parallel. Failures come back sorted
/// by suite and seed.
pub fn run(suites: &[Suite], max_n: usize, seeds: u64) -> Summary {
    let jobs: Vec<(Suite, u64)> = suites.iter().flat_map(|&s| (0..seeds).map(move |seed| (s, seed))).collect();
    let results: Vec<_> = jobs.par_iter().map(|&(s, seed)| check_seed(s, seed, max_n)).collect();
    let mut summary = Summary {
        checked: jobs.len(),
        ..Default::default()
    };
    for r in results {
        match r {
            Ok(stats) => summary.stats.extend(stats),
            Err(f) => summary.failures.push(*f),
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_cover_the_range() {
        let sizes: Vec<_> = (0..5).map(|s| seed_size(s, 7)).collect();
        assert_eq!(sizes, vec![3, 4, 5, 6, 7]);
        assert_eq!(seed_size(9, 2), 2);
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(seed_graph(17, 7), seed_graph(17, 7));
    }

    #[test]
    fn every_suite_passes_a_few_seeds() {
        let s = run(&Suite::ALL, 5, 6);
        assert!(s.failures.is_empty(), "{}", s.failures[0]);
        assert_eq!(s.checked, 42);
        assert!(!s.stats.is_empty());
    }
}
