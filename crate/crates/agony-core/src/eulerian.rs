//! Eulerian subgraphs: the dual certificates of agony minimization.
//!
//! A subgraph H = (V, F) is eulerian when every vertex has equal in- and
//! out-degree within F, i.e. F is a union of edge-disjoint cycles
//! (connectivity not required). H is *maximal* when no edge can be added,
//! which holds exactly when the remainder E \ F is acyclic. `cycle_dfs`
//! finds a maximal H in one DFS pass; `initial_rank` layers the acyclic
//! remainder into a rank function that conforms to H.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::DirectedGraph;
use crate::rank::RankFunction;
use crate::Error;

/// Edge subset tracked as a membership bitmap plus per-vertex degree
/// counters restricted to member edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianSubgraph {
    member: Vec<bool>,
    in_deg: Vec<usize>,
    out_deg: Vec<usize>,
    edge_count: usize,
}

impl EulerianSubgraph {
    pub fn empty(g: &DirectedGraph) -> Self {
        Self {
            member: vec![false; g.edge_count()],
            in_deg: vec![0; g.vertex_count()],
            out_deg: vec![0; g.vertex_count()],
            edge_count: 0,
        }
    }

    /// Builds a subgraph from edge indices of `g`. Errors on an index >= m;
    /// duplicate indices are idempotent.
    pub fn from_edge_indices<I>(g: &DirectedGraph, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut f = Self::empty(g);
        for e in edges {
            if e >= g.edge_count() {
                return Err(Error::Contract("edge index out of range"));
            }
            f.insert(g, e);
        }
        Ok(f)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.member[e]
    }

    /// Number of member edges, |F|.
    pub fn len(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.edge_count == 0
    }

    /// Total edge slots (the m of the owning graph).
    pub fn edge_capacity(&self) -> usize {
        self.member.len()
    }

    pub fn insert(&mut self, g: &DirectedGraph, e: usize) {
        if !self.member[e] {
            let (u, v) = g.edge(e);
            self.member[e] = true;
            self.out_deg[u] += 1;
            self.in_deg[v] += 1;
            self.edge_count += 1;
        }
    }

    pub fn remove(&mut self, g: &DirectedGraph, e: usize) {
        if self.member[e] {
            let (u, v) = g.edge(e);
            self.member[e] = false;
            self.out_deg[u] -= 1;
            self.in_deg[v] -= 1;
            self.edge_count -= 1;
        }
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_deg[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg[v]
    }

    /// Eulerian degree balance: in-degree == out-degree at every vertex.
    pub fn is_balanced(&self) -> bool {
        self.in_deg.iter().zip(&self.out_deg).all(|(i, o)| i == o)
    }

    /// Member edge indices, ascending.
    pub fn edge_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(e, &m)| m.then_some(e))
    }
}

/// Discovers a maximal eulerian subgraph in O(n + m): depth-first search
/// that, on meeting a vertex already on the path, moves the closed cycle's
/// edges into F and pops the path back to that vertex (keeping it). A vertex
/// with no remaining usable out-edges is dead; edges into dead vertices can
/// never close a cycle and are skipped where they are found.
///
/// Start vertices and out-edges are taken in ascending order, so the result
/// is deterministic.
pub fn cycle_dfs(g: &DirectedGraph) -> EulerianSubgraph {
    let n = g.vertex_count();
    let mut f = EulerianSubgraph::empty(g);
    let mut consumed = vec![false; g.edge_count()];
    let mut cursor = vec![0usize; n];
    let mut dead = vec![false; n];
    let mut on_stack = vec![false; n];
    // (vertex, edge that reached it); the bottom entry has no such edge
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for start in 0..n {
        if dead[start] {
            continue;
        }
        stack.push((start, usize::MAX));
        on_stack[start] = true;
        while let Some(&(u, _)) = stack.last() {
            let out = g.out_edges(u);
            let heads = g.out_heads(u);
            while cursor[u] < out.len() {
                if consumed[out[cursor[u]]] || dead[heads[cursor[u]]] {
                    cursor[u] += 1;
                } else {
                    break;
                }
            }
            if cursor[u] == out.len() {
                dead[u] = true;
                on_stack[u] = false;
                stack.pop();
                continue;
            }
            let e = out[cursor[u]];
            let v = heads[cursor[u]];
            if on_stack[v] {
                // Close the cycle: e plus the path edges from v up to u.
                f.insert(g, e);
                consumed[e] = true;
                while stack.last().unwrap().0 != v {
                    let (w, path_edge) = stack.pop().unwrap();
                    on_stack[w] = false;
                    f.insert(g, path_edge);
                    consumed[path_edge] = true;
                }
            } else {
                stack.push((v, e));
                on_stack[v] = true;
            }
        }
    }
    debug_assert!(f.is_balanced());
    f
}

/// True iff `h` is eulerian (degree balance) and maximal (the remainder
/// E \ F is acyclic).
pub fn is_maximal_eulerian(g: &DirectedGraph, h: &EulerianSubgraph) -> bool {
    h.is_balanced() && remainder_peel(g, h).is_some()
}

/// Layers the acyclic remainder E \ F: layer 0 is every vertex with no
/// incoming remainder edge, peeled simultaneously; repeat with the next
/// layer at rank 1, and so on. The result conforms to `h` (every backward
/// edge under it is a member of `h`) and its maximum rank is at most n - 1.
///
/// Errors when the remainder contains a cycle, i.e. `h` is not maximal.
pub fn initial_rank(g: &DirectedGraph, h: &EulerianSubgraph) -> Result<RankFunction, Error> {
    remainder_peel(g, h).ok_or(Error::Contract(
        "remainder contains a cycle: subgraph is not maximal",
    ))
}

/// Kahn-style simultaneous peel of the remainder; None if a cycle blocks it.
fn remainder_peel(g: &DirectedGraph, h: &EulerianSubgraph) -> Option<RankFunction> {
    let n = g.vertex_count();
    let mut indeg = vec![0usize; n];
    for e in g.remainder_edges(h) {
        indeg[g.edge(e).1] += 1;
    }
    let mut ranks = vec![0i64; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut peeled = 0usize;
    let mut level = 0i64;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &u in &layer {
            ranks[u] = level;
            peeled += 1;
            for (&e, &v) in g.out_edges(u).iter().zip(g.out_heads(u)) {
                if h.contains(e) {
                    continue;
                }
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    next.push(v);
                }
            }
        }
        layer = next;
        level += 1;
    }
    (peeled == n).then(|| RankFunction::from_ranks(ranks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{left_graph, right_graph, subgraph_from_pairs, SEVEN_CYCLE_EDGES};
    use crate::rank::{conforms, graph_agony};

    #[test]
    fn cycle_dfs_finds_both_cycles_of_the_left_graph() {
        let g = left_graph();
        let f = cycle_dfs(&g);
        let expected = subgraph_from_pairs(&g, &SEVEN_CYCLE_EDGES);
        assert_eq!(f, expected);
        assert_eq!(f.len(), 7);
    }

    #[test]
    fn cycle_dfs_two_cycle() {
        let (g, _) = DirectedGraph::parse_edge_list("u v\nv u", false).unwrap();
        let f = cycle_dfs(&g);
        assert_eq!(f.len(), 2);
        assert!(is_maximal_eulerian(&g, &f));
    }

    #[test]
    fn cycle_dfs_right_graph_is_maximal() {
        let g = right_graph();
        let f = cycle_dfs(&g);
        assert!(f.len() == 7 || f.len() == 8);
        assert!(is_maximal_eulerian(&g, &f));
    }

    #[test]
    fn cycle_dfs_on_dag_is_empty() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb c\na c", false).unwrap();
        assert!(cycle_dfs(&g).is_empty());
    }

    #[test]
    fn maximality_examples() {
        let gl = left_graph();
        let hl = subgraph_from_pairs(&gl, &SEVEN_CYCLE_EDGES);
        assert!(is_maximal_eulerian(&gl, &hl));

        // The same seven edges are maximal in the right graph too, though not
        // maximum there (eight is attainable).
        let gr = right_graph();
        let hl_in_gr = subgraph_from_pairs(&gr, &SEVEN_CYCLE_EDGES);
        assert!(is_maximal_eulerian(&gr, &hl_in_gr));

        assert!(!is_maximal_eulerian(&gl, &EulerianSubgraph::empty(&gl)));
    }

    #[test]
    fn unbalanced_subgraph_is_not_eulerian() {
        let g = left_graph();
        let mut h = subgraph_from_pairs(&g, &SEVEN_CYCLE_EDGES);
        let ba = g
            .edge_between(g.vertex_id("b").unwrap(), g.vertex_id("a").unwrap())
            .unwrap();
        h.remove(&g, ba);
        assert!(!h.is_balanced());
        assert!(!is_maximal_eulerian(&g, &h));
    }

    #[test]
    fn initial_rank_peels_layer_by_layer() {
        let g = left_graph();
        let h = subgraph_from_pairs(&g, &SEVEN_CYCLE_EDGES);
        let r = initial_rank(&g, &h).unwrap();
        let expect = [
            ("a", 0),
            ("b", 0),
            ("c", 0),
            ("d", 0),
            ("f", 0),
            ("g", 0),
            ("e", 1),
            ("h", 2),
        ];
        for (label, rank) in expect {
            assert_eq!(r.rank(g.vertex_id(label).unwrap()), rank, "{label}");
        }
        assert!(conforms(&r, &h, &g));
    }

    #[test]
    fn initial_rank_of_dag_is_layered_topological() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb c\na c", false).unwrap();
        let h = EulerianSubgraph::empty(&g);
        let r = initial_rank(&g, &h).unwrap();
        assert_eq!(graph_agony(&g, &r), 0);
        assert!(r.ranks.iter().max().unwrap() <= &(g.vertex_count() as i64 - 1));
    }

    #[test]
    fn initial_rank_with_empty_remainder_is_all_zero() {
        let (g, _) = DirectedGraph::parse_edge_list("u v\nv u", false).unwrap();
        let h = cycle_dfs(&g);
        let r = initial_rank(&g, &h).unwrap();
        assert_eq!(r.ranks, vec![0, 0]);
    }

    #[test]
    fn initial_rank_rejects_cyclic_remainder() {
        let g = left_graph();
        let h = EulerianSubgraph::empty(&g);
        assert!(matches!(initial_rank(&g, &h), Err(Error::Contract(_))));
    }

    #[test]
    fn from_edge_indices_checks_bounds() {
        let g = left_graph();
        assert!(EulerianSubgraph::from_edge_indices(&g, [10]).is_err());
        assert!(EulerianSubgraph::from_edge_indices(&g, [9]).is_ok());
    }

    #[test]
    fn remainder_iterates_non_members() {
        let g = left_graph();
        let h = subgraph_from_pairs(&g, &SEVEN_CYCLE_EDGES);
        let rem: Vec<(&str, &str)> = g
            .remainder_edges(&h)
            .map(|e| {
                let (u, v) = g.edge(e);
                (g.label(u), g.label(v))
            })
            .collect();
        assert_eq!(rem, vec![("e", "h"), ("g", "h"), ("a", "e")]);

        let empty = EulerianSubgraph::empty(&g);
        assert_eq!(g.remainder_edges(&empty).count(), g.edge_count());
    }
}
