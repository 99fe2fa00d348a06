//! The two worked-example graphs shared by unit tests across modules.
//!
//! The left graph has a unique maximum eulerian subgraph: the 4-cycle
//! b-a-c-d plus the 3-cycle f-e-g, seven edges. Adding the edge (e, c)
//! (the right graph) opens an alternative long cycle through a-e-c-d-b
//! that makes those seven edges maximal but no longer maximum.

use crate::eulerian::EulerianSubgraph;
use crate::graph::DirectedGraph;

pub(crate) const SEVEN_CYCLE_EDGES: [(&str, &str); 7] = [
    ("b", "a"),
    ("a", "c"),
    ("c", "d"),
    ("d", "b"),
    ("f", "e"),
    ("e", "g"),
    ("g", "f"),
];

pub(crate) const EIGHT_CYCLE_EDGES: [(&str, &str); 8] = [
    ("b", "a"),
    ("a", "e"),
    ("e", "c"),
    ("c", "d"),
    ("d", "b"),
    ("f", "e"),
    ("e", "g"),
    ("g", "f"),
];

pub(crate) fn left_graph() -> DirectedGraph {
    DirectedGraph::parse_edge_list("b a\na c\nc d\nd b\nf e\ne g\ng f\ne h\ng h\na e", false)
        .unwrap()
        .0
}

pub(crate) fn right_graph() -> DirectedGraph {
    DirectedGraph::parse_edge_list(
        "b a\na c\nc d\nd b\nf e\ne g\ng f\ne h\ng h\na e\ne c",
        false,
    )
    .unwrap()
    .0
}

pub(crate) fn subgraph_from_pairs(g: &DirectedGraph, pairs: &[(&str, &str)]) -> EulerianSubgraph {
    let ids = pairs.iter().map(|&(u, v)| {
        g.edge_between(g.vertex_id(u).unwrap(), g.vertex_id(v).unwrap())
            .unwrap()
    });
    EulerianSubgraph::from_edge_indices(g, ids).unwrap()
}

pub(crate) fn seven_cycle(g: &DirectedGraph) -> EulerianSubgraph {
    subgraph_from_pairs(g, &SEVEN_CYCLE_EDGES)
}

