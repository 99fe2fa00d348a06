//! Hierarchy discovery in directed graphs by exact agony minimization.
//!
//! A rank function `r` assigns an integer level to every vertex; smaller rank
//! means higher up the hierarchy. An edge (u, v) is *forward* when
//! `r(u) < r(v)` and costs nothing; every other edge pays
//! `r(u) - r(v) + 1`. The total cost is the *agony* of the graph under `r`,
//! and the goal is a rank function of minimum agony.
//!
//! The dual object is an eulerian subgraph H (in-degree == out-degree at
//! every vertex): `|E(H)| <= agony(G, r)` for any H and any rank conforming
//! to it, so a pair with `|E(H)| == agony` certifies both sides optimal.
//! The solver grows such a pair: [`eulerian::cycle_dfs`] finds a maximal H,
//! [`eulerian::initial_rank`] layers the acyclic remainder, and
//! [`solver::Solver`] drains slack one relief step at a time, occasionally
//! augmenting H. [`baseline`] reaches the same optimum independently through
//! negative-cycle canceling, and [`oracle`] brute-forces tiny instances.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod baseline;
pub mod eulerian;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod graph;
pub mod oracle;
pub mod rank;
pub mod solver;

pub use baseline::{gupte_min_agony, max_eulerian_cycle_canceling};
pub use eulerian::{cycle_dfs, initial_rank, is_maximal_eulerian, EulerianSubgraph};
pub use graph::{DirectedGraph, LoadStats};
pub use rank::{
    approximation_ratio_bound, conforms, edge_agony, edge_slack, graph_agony, is_forward,
    partition_from_rank, RankFunction, Ratio,
};
pub use solver::{
    min_agony, solve, IterationTrace, ReliefCase, SolveOptions, Solution, Solver, TraceRow,
};

/// Errors shared by every stage: input parsing, precondition checks, and the
/// enumeration budgets of the brute-force oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input line; `line` is 1-based.
    Parse { line: usize, message: String },
    /// A documented precondition does not hold.
    Contract(&'static str),
    /// Brute-force enumeration refused: the input exceeds the stated budget.
    Budget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::Contract(what) => write!(f, "contract violation: {what}"),
            Error::Budget {
                what,
                limit,
                actual,
            } => write!(f, "{what}: limit is {limit}, got {actual}"),
        }
    }
}

impl core::error::Error for Error {}
