//! Exhaustive reference implementations for desk-scale graphs. These exist
//! to check the real solver, so they share no code with it beyond the edge
//! scoring primitives.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::DirectedGraph;
use crate::rank::{graph_agony, RankFunction};
use crate::Error;

/// Largest vertex count `brute_min_agony` will accept.
pub const BRUTE_RANK_VERTEX_LIMIT: usize = 7;
/// Largest edge count `brute_max_eulerian` will accept.
pub const BRUTE_EULERIAN_EDGE_LIMIT: usize = 20;

/// Minimum agony over every rank function, by enumerating all assignments
/// r: V -> {0, .., n-1}. Restricting the codomain loses nothing: collapsing
/// the empty gaps out of any rank function never raises an edge's agony.
/// Returns the lexicographically first witness. n^n candidates, so the
/// vertex count is capped at [`BRUTE_RANK_VERTEX_LIMIT`].
pub fn brute_min_agony(g: &DirectedGraph) -> Result<(u64, RankFunction), Error> {
    let n = g.vertex_count();
    if n > BRUTE_RANK_VERTEX_LIMIT {
        return Err(Error::Budget {
            what: "brute_min_agony vertex count",
            limit: BRUTE_RANK_VERTEX_LIMIT,
            actual: n,
        });
    }
    if n == 0 {
        return Ok((0, RankFunction::zero(0)));
    }
    let mut ranks = vec![0i64; n];
    let mut best = graph_agony(g, &RankFunction::from_ranks(ranks.clone()));
    let mut best_ranks = ranks.clone();
    'outer: loop {
        // odometer increment over base-n digits, most significant first so
        // the first minimum found is the lexicographically smallest
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            ranks[i] += 1;
            if ranks[i] < n as i64 {
                break;
            }
            ranks[i] = 0;
        }
        let candidate = RankFunction::from_ranks(ranks.clone());
        let agony = graph_agony(g, &candidate);
        if agony < best {
            best = agony;
            best_ranks.copy_from_slice(&ranks);
        }
    }
    Ok((best, RankFunction::from_ranks(best_ranks)))
}

/// Maximum eulerian subgraph size by checking every edge subset for
/// balance. Returns the size and the first maximum in ascending bitmask
/// order. 2^m subsets, so the edge count is capped at
/// [`BRUTE_EULERIAN_EDGE_LIMIT`].
pub fn brute_max_eulerian(g: &DirectedGraph) -> Result<(usize, Vec<usize>), Error> {
    let m = g.edge_count();
    if m > BRUTE_EULERIAN_EDGE_LIMIT {
        return Err(Error::Budget {
            what: "brute_max_eulerian edge count",
            limit: BRUTE_EULERIAN_EDGE_LIMIT,
            actual: m,
        });
    }
    let n = g.vertex_count();
    let mut balance = vec![0i32; n];
    let mut touched: Vec<usize> = Vec::with_capacity(n);
    let mut best_size = 0usize;
    let mut best_mask = 0u32;
    for mask in 0u32..(1u32 << m) {
        let size = mask.count_ones() as usize;
        if size <= best_size {
            continue;
        }
        for &v in &touched {
            balance[v] = 0;
        }
        touched.clear();
        for e in 0..m {
            if mask & (1 << e) != 0 {
                let (u, v) = g.edge(e);
                if balance[u] == 0 && balance[v] == 0 {
                    touched.push(u);
                    touched.push(v);
                } else if balance[u] == 0 {
                    touched.push(u);
                } else if balance[v] == 0 {
                    touched.push(v);
                }
                balance[u] += 1;
                balance[v] -= 1;
            }
        }
        if touched.iter().all(|&v| balance[v] == 0) {
            best_size = size;
            best_mask = mask;
        }
    }
    let edges = (0..m).filter(|e| best_mask & (1 << e) != 0).collect();
    Ok((best_size, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{left_graph, right_graph, seven_cycle};
    use crate::rank::graph_agony;

    #[test]
    fn min_agony_of_dag_is_zero() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb c\na c", false).unwrap();
        let (agony, r) = brute_min_agony(&g).unwrap();
        assert_eq!(agony, 0);
        assert_eq!(graph_agony(&g, &r), 0);
    }

    #[test]
    fn min_agony_of_two_cycle_is_two() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb a", false).unwrap();
        assert_eq!(brute_min_agony(&g).unwrap().0, 2);
    }

    #[test]
    fn min_agony_of_three_cycle_is_three() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb c\nc a", false).unwrap();
        assert_eq!(brute_min_agony(&g).unwrap().0, 3);
    }

    // The fixtures exceed the rank-enumeration budget (8 vertices), but the
    // sandwich still pins their optima exactly: the eulerian oracle gives
    // the lower bound, an explicit rank function the matching upper bound.

    #[test]
    fn left_fixture_minimum_is_seven() {
        let g = left_graph();
        assert_eq!(brute_max_eulerian(&g).unwrap().0, 7);
        let r = RankFunction::from_labeled(
            &g,
            [
                ("a", 1),
                ("b", 1),
                ("f", 1),
                ("g", 1),
                ("c", 2),
                ("e", 2),
                ("d", 3),
                ("h", 3),
            ],
        )
        .unwrap();
        assert_eq!(graph_agony(&g, &r), 7);
    }

    #[test]
    fn right_fixture_minimum_is_eight() {
        let g = right_graph();
        assert_eq!(brute_max_eulerian(&g).unwrap().0, 8);
        let r = RankFunction::from_labeled(
            &g,
            [
                ("a", 1),
                ("b", 1),
                ("f", 1),
                ("g", 1),
                ("e", 2),
                ("c", 3),
                ("d", 3),
                ("h", 3),
            ],
        )
        .unwrap();
        assert_eq!(graph_agony(&g, &r), 8);
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb a", false).unwrap();
        let (_, r) = brute_min_agony(&g).unwrap();
        // both orderings score 2; [0, 0] precedes them all
        assert_eq!(r.ranks, vec![0, 0]);
    }

    #[test]
    fn max_eulerian_of_dag_is_empty() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\nb c\na c", false).unwrap();
        let (size, edges) = brute_max_eulerian(&g).unwrap();
        assert_eq!(size, 0);
        assert!(edges.is_empty());
    }

    #[test]
    fn max_eulerian_of_left_fixture_is_the_seven_cycle_pair() {
        let g = left_graph();
        let (size, edges) = brute_max_eulerian(&g).unwrap();
        assert_eq!(size, 7);
        let mut expected: Vec<usize> = seven_cycle(&g).edge_indices().collect();
        expected.sort_unstable();
        assert_eq!(edges, expected);
    }

    #[test]
    fn max_eulerian_of_right_fixture_is_eight() {
        assert_eq!(brute_max_eulerian(&right_graph()).unwrap().0, 8);
    }

    #[test]
    fn budgets_are_enforced() {
        let mut text = String::new();
        for i in 0..8 {
            text.push_str(&format!("v{i} v{}\n", (i + 1) % 8));
        }
        let (g, _) = DirectedGraph::parse_edge_list(&text, false).unwrap();
        assert!(matches!(
            brute_min_agony(&g),
            Err(Error::Budget { limit: 7, actual: 8, .. })
        ));

        let mut text = String::new();
        for i in 0..21 {
            text.push_str(&format!("a{i} b{i}\n"));
        }
        let (g, _) = DirectedGraph::parse_edge_list(&text, false).unwrap();
        assert!(matches!(
            brute_max_eulerian(&g),
            Err(Error::Budget { limit: 20, actual: 21, .. })
        ));
    }
}
