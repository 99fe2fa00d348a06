//! Rank functions and the agony/slack arithmetic on top of them.
//!
//! Conventions:
//!   r(v)            integer level of v; smaller rank = higher in the hierarchy
//!   forward edge    (u, v) with r(u) < r(v); costs nothing
//!   agony of edge   max(r(u) - r(v) + 1, 0); same-level edges cost 1
//!   slack of edge   max(r(v) - r(u) - 1, 0); positive only for forward
//!                   edges that skip at least one level
//!
//! For every edge, agony - slack == r(u) - r(v) + 1 exactly, which is the
//! bridge between the primal objective and the duality gap: against any
//! maximal eulerian subgraph H and any rank conforming to it,
//! agony(G, r) == |E(H)| + total slack over E(H).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::eulerian::EulerianSubgraph;
use crate::graph::DirectedGraph;
use crate::Error;

/// Integer rank per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFunction {
    pub ranks: Vec<i64>,
}

impl RankFunction {
    pub fn zero(vertex_count: usize) -> Self {
        Self {
            ranks: vec![0; vertex_count],
        }
    }

    pub fn from_ranks(ranks: Vec<i64>) -> Self {
        Self { ranks }
    }

    /// Builds a rank function from (label, rank) pairs. Every vertex of `g`
    /// must get exactly one rank and every label must exist in `g`.
    pub fn from_labeled<'a, I>(g: &DirectedGraph, pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        let mut ranks = vec![i64::MIN; g.vertex_count()];
        for (label, rank) in pairs {
            let v = g
                .vertex_id(label)
                .ok_or(Error::Contract("rank label not present in graph"))?;
            if ranks[v] != i64::MIN {
                return Err(Error::Contract("duplicate rank for vertex"));
            }
            ranks[v] = rank;
        }
        if ranks.iter().any(|&r| r == i64::MIN) {
            return Err(Error::Contract("rank missing for some vertex"));
        }
        Ok(Self { ranks })
    }

    pub fn rank(&self, v: usize) -> i64 {
        self.ranks[v]
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Shifts all ranks so the minimum is 0. Agony is translation invariant,
    /// so this never changes a score; it is output normalization only.
    pub fn normalize(&mut self) {
        if let Some(&min) = self.ranks.iter().min() {
            if min != 0 {
                for r in &mut self.ranks {
                    *r -= min;
                }
            }
        }
    }
}

/// max(r(u) - r(v) + 1, 0): zero exactly for forward edges.
pub fn edge_agony(r: &RankFunction, u: usize, v: usize) -> u64 {
    (r.rank(u) - r.rank(v) + 1).max(0) as u64
}

/// max(r(v) - r(u) - 1, 0): positive only for forward edges spanning two or
/// more levels.
pub fn edge_slack(r: &RankFunction, u: usize, v: usize) -> u64 {
    (r.rank(v) - r.rank(u) - 1).max(0) as u64
}

/// True iff r(u) < r(v). Same-level edges are backward.
pub fn is_forward(r: &RankFunction, u: usize, v: usize) -> bool {
    r.rank(u) < r.rank(v)
}

/// Sum of edge agonies over the whole graph.
pub fn graph_agony(g: &DirectedGraph, r: &RankFunction) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| edge_agony(r, u, v))
        .sum()
}

/// A rank conforms to a subgraph when every backward edge of the graph is a
/// member of the subgraph.
pub fn conforms(r: &RankFunction, h: &EulerianSubgraph, g: &DirectedGraph) -> bool {
    g.edges()
        .iter()
        .enumerate()
        .all(|(e, &(u, v))| is_forward(r, u, v) || h.contains(e))
}

/// Groups vertices by rank, blocks ordered by ascending rank, empty levels
/// omitted. Vertex ids ascend within each block.
pub fn partition_from_rank(r: &RankFunction) -> Vec<Vec<usize>> {
    let mut by_rank: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (v, &rank) in r.ranks.iter().enumerate() {
        by_rank.entry(rank).or_default().push(v);
    }
    by_rank.into_values().collect()
}

/// Exact nonnegative rational, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Self { num: 1, den: 1 }
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    /// Accepts "2", "8/7", or decimal notation like "0.25". Returns None on
    /// anything else (including negative values).
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: u64 = num.trim().parse().ok()?;
            let den: u64 = den.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            return Some(Self::new(num, den));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
            if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let scale = 10u64.pow(frac.len() as u32);
            let frac: u64 = frac.parse().ok()?;
            return Some(Self::new(int.checked_mul(scale)?.checked_add(frac)?, scale));
        }
        s.parse().ok().map(|n| Self::new(n, 1))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// agony / eulerian_edges as an exact ratio; 1 when both are zero. The pair
/// must come from a conforming state, so agony < eulerian_edges is a duality
/// breach and an error, as is a positive agony with an empty certificate.
pub fn approximation_ratio_bound(agony: u64, eulerian_edges: u64) -> Result<Ratio, Error> {
    if agony < eulerian_edges {
        return Err(Error::Contract(
            "duality breach: agony below certificate size",
        ));
    }
    if eulerian_edges == 0 {
        if agony == 0 {
            return Ok(Ratio::one());
        }
        return Err(Error::Contract(
            "unbounded ratio: positive agony with empty certificate",
        ));
    }
    Ok(Ratio::new(agony, eulerian_edges))
}
