//! The command bodies behind `agony compute`, `agony verify`, and
//! `agony bench`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use agony_core::{
    graph_agony, gupte_min_agony, solve, DirectedGraph, Ratio, SolveOptions, Solution,
};

use crate::io;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    /// Primal-dual: maximal subgraph by cycle DFS, grown on demand.
    Relief,
    /// Baseline: maximum subgraph by cycle canceling up front, then the
    /// same slack drain. Always exact; ignores --epsilon.
    Gupte,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Relief => "relief",
            Algorithm::Gupte => "gupte",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub algorithm: Algorithm,
    pub epsilon: Ratio,
    pub speedup: bool,
    pub dedupe: bool,
    pub out: Option<PathBuf>,
    pub trace: Option<PathBuf>,
    /// Reserved; the pipeline is deterministic and takes no randomness.
    pub seed: Option<u64>,
}

fn run_algorithm(
    g: &DirectedGraph,
    algorithm: Algorithm,
    epsilon: &Ratio,
    speedup: bool,
    trace: bool,
) -> Result<(Solution, u128), CliError> {
    let options = SolveOptions {
        epsilon: epsilon.clone(),
        speedup,
        trace,
    };
    let started = Instant::now();
    let solution = match algorithm {
        Algorithm::Relief => solve(g, &options)?,
        Algorithm::Gupte => gupte_min_agony(g, &options)?,
    };
    Ok((solution, started.elapsed().as_millis()))
}

/// Solves one input and writes ranks (file or stdout) plus an optional
/// trace CSV. The summary line is
/// `n m iterations agony eulerian_edges elapsed_ms`.
pub fn cmd_compute(config: &RunConfig) -> Result<(), CliError> {
    let (g, _) = io::read_graph(&config.input, config.dedupe)?;
    let (solution, elapsed_ms) = run_algorithm(
        &g,
        config.algorithm,
        &config.epsilon,
        config.speedup,
        config.trace.is_some(),
    )?;
    println!(
        "{} {} {} {} {} {}",
        g.vertex_count(),
        g.edge_count(),
        solution.iterations,
        solution.agony,
        solution.eulerian_edges,
        elapsed_ms
    );
    match &config.out {
        Some(path) => io::write_ranks(path, &g, &solution.rank)?,
        None => print!("{}", io::ranks_to_tsv(&g, &solution.rank)),
    }
    if let Some(path) = &config.trace {
        io::write_trace(path, &solution.trace)?;
    }
    Ok(())
}

/// Recomputes agony for a rank file and, given a certificate, checks the
/// duality sandwich: balance, membership, and |E(H)| <= agony. Equality is
/// a proof that both sides are optimal; otherwise the ratio bounds how far
/// the rank can be from optimal.
pub fn cmd_verify(
    input: &Path,
    ranks: &Path,
    certificate: Option<&Path>,
    dedupe: bool,
) -> Result<(), CliError> {
    let (g, _) = io::read_graph(input, dedupe)?;
    let r = io::read_rank_file(ranks, &g)?;
    let agony = graph_agony(&g, &r);
    let Some(cert_path) = certificate else {
        println!("agony {agony}");
        return Ok(());
    };
    let h = io::read_certificate(cert_path, &g)?;
    if !h.is_balanced() {
        return Err(CliError::Verify(
            "certificate violates degree balance".to_string(),
        ));
    }
    let members = h.len() as u64;
    if members > agony {
        return Err(CliError::Verify(format!(
            "certificate {members} exceeds agony {agony}: no eulerian subgraph can",
        )));
    }
    if members == agony {
        println!("optimal: agony {agony} == certificate {members}");
    } else {
        let ratio = agony_core::approximation_ratio_bound(agony, members)?;
        println!("bound: agony {agony} >= certificate {members}, ratio {ratio}");
    }
    Ok(())
}

/// Runs each input under each selected algorithm (input order preserved),
/// one row per run: `input algorithm n m iterations agony eulerian_edges
/// elapsed_ms`. Failures are reported and do not stop later inputs, but the
/// first one decides the exit status. With --trace DIR, per-run CSVs land
/// in DIR as `<stem>.<algorithm>.trace.csv`.
pub fn cmd_bench(
    inputs: &[PathBuf],
    algorithm: Option<Algorithm>,
    epsilon: &Ratio,
    speedup: bool,
    dedupe: bool,
    trace_dir: Option<&Path>,
) -> Result<(), CliError> {
    if inputs.is_empty() {
        return Err(CliError::Usage("bench requires at least one input".into()));
    }
    let algorithms: &[Algorithm] = match algorithm {
        Some(a) => match a {
            Algorithm::Relief => &[Algorithm::Relief],
            Algorithm::Gupte => &[Algorithm::Gupte],
        },
        None => &[Algorithm::Relief, Algorithm::Gupte],
    };
    if let Some(dir) = trace_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut first_failure: Option<CliError> = None;
    for input in inputs {
        for &algo in algorithms {
            match bench_one(input, algo, epsilon, speedup, dedupe, trace_dir) {
                Ok(row) => println!("{row}"),
                Err(err) => {
                    eprintln!("agony: {}: {err}", input.display());
                    first_failure.get_or_insert(err);
                }
            }
        }
    }
    match first_failure {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

fn bench_one(
    input: &Path,
    algorithm: Algorithm,
    epsilon: &Ratio,
    speedup: bool,
    dedupe: bool,
    trace_dir: Option<&Path>,
) -> Result<String, CliError> {
    let (g, _) = io::read_graph(input, dedupe)?;
    let (solution, elapsed_ms) =
        run_algorithm(&g, algorithm, epsilon, speedup, trace_dir.is_some())?;
    if let Some(dir) = trace_dir {
        let stem = input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "dataset".to_string());
        let path = dir.join(format!("{stem}.{}.trace.csv", algorithm.name()));
        io::write_trace(&path, &solution.trace)?;
    }
    Ok(format!(
        "{} {} {} {} {} {} {} {}",
        input.display(),
        algorithm.name(),
        g.vertex_count(),
        g.edge_count(),
        solution.iterations,
        solution.agony,
        solution.eulerian_edges,
        elapsed_ms
    ))
}
