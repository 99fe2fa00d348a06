// shared by several test binaries; not every binary uses every helper
#![allow(dead_code)]

use agony_core::{DirectedGraph, EulerianSubgraph, RankFunction};
use rand::Rng;

pub const LEFT_EDGES: &str = "b a\na c\nc d\nd b\nf e\ne g\ng f\ne h\ng h\na e";
pub const RIGHT_EDGES: &str = "b a\na c\nc d\nd b\nf e\ne g\ng f\ne h\ng h\na e\ne c";

pub fn left_graph() -> DirectedGraph {
    DirectedGraph::parse_edge_list(LEFT_EDGES, false).unwrap().0
}

pub fn right_graph() -> DirectedGraph {
    DirectedGraph::parse_edge_list(RIGHT_EDGES, false).unwrap().0
}

pub fn edge(g: &DirectedGraph, u: &str, v: &str) -> usize {
    g.edge_between(g.vertex_id(u).unwrap(), g.vertex_id(v).unwrap())
        .unwrap()
}

pub fn subgraph(g: &DirectedGraph, pairs: &[(&str, &str)]) -> EulerianSubgraph {
    EulerianSubgraph::from_edge_indices(g, pairs.iter().map(|&(u, v)| edge(g, u, v))).unwrap()
}

/// The 4-cycle plus 3-cycle shared by both fixture graphs.
pub fn seven_cycle(g: &DirectedGraph) -> EulerianSubgraph {
    subgraph(
        g,
        &[
            ("b", "a"),
            ("a", "c"),
            ("c", "d"),
            ("d", "b"),
            ("f", "e"),
            ("e", "g"),
            ("g", "f"),
        ],
    )
}

/// The unique maximum of the right graph: the long cycle through (e, c)
/// plus the 3-cycle.
pub fn eight_cycle(g: &DirectedGraph) -> EulerianSubgraph {
    subgraph(
        g,
        &[
            ("b", "a"),
            ("a", "e"),
            ("e", "c"),
            ("c", "d"),
            ("d", "b"),
            ("f", "e"),
            ("e", "g"),
            ("g", "f"),
        ],
    )
}

pub fn left_rank(g: &DirectedGraph) -> RankFunction {
    RankFunction::from_labeled(
        g,
        [
            ("a", 0),
            ("f", 0),
            ("b", 1),
            ("e", 1),
            ("g", 1),
            ("c", 2),
            ("h", 2),
            ("d", 3),
        ],
    )
    .unwrap()
}

pub fn rank_of(g: &DirectedGraph, r: &RankFunction, label: &str) -> i64 {
    r.rank(g.vertex_id(label).unwrap())
}

/// Simple digraph: every ordered pair of distinct vertices independently
/// with probability p.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> DirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edges(n, edges).unwrap()
}

/// Multigraph: m edges sampled uniformly with replacement (self-loops
/// rerolled), so parallel edges show up routinely.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> DirectedGraph {
    assert!(n >= 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    DirectedGraph::from_edges(n, edges).unwrap()
}
