//! Independent baseline: grow the eulerian subgraph to a true maximum by
//! negative-cycle canceling before any rank work, then let the relief loop
//! drain slack. Because the subgraph is already maximum, every relief call
//! must land in case 1; an augmentation here means the canceling phase was
//! wrong, and is reported as a contract violation rather than papered over.

use alloc::vec;
use alloc::vec::Vec;

use crate::eulerian::{cycle_dfs, initial_rank, EulerianSubgraph};
use crate::graph::DirectedGraph;
use crate::solver::{IterationTrace, ReliefCase, SolveOptions, Solution, Solver, TraceRow};
use crate::Error;

/// One residual arc per graph edge: a remainder edge may be added to the
/// subgraph (arc along the edge, weight -1), a member edge may be removed
/// (arc against it, weight +1). A negative cycle is then exactly a
/// membership flip that grows the subgraph while preserving balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidualArc {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
    pub edge: usize,
    pub adds: bool,
}

#[derive(Debug, Clone)]
pub struct ResidualGraph {
    pub vertex_count: usize,
    pub arcs: Vec<ResidualArc>,
}

impl ResidualGraph {
    pub fn build(g: &DirectedGraph, f: &EulerianSubgraph) -> Self {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                if f.contains(e) {
                    ResidualArc {
                        from: v,
                        to: u,
                        weight: 1,
                        edge: e,
                        adds: false,
                    }
                } else {
                    ResidualArc {
                        from: u,
                        to: v,
                        weight: -1,
                        edge: e,
                        adds: true,
                    }
                }
            })
            .collect();
        Self {
            vertex_count: g.vertex_count(),
            arcs,
        }
    }
}

/// Bellman-Ford from a virtual source at distance 0 everywhere, returning
/// the arc indices of some negative cycle, or None if none exists. After
/// each relaxation pass the predecessor graph is swept for a cycle — any
/// cycle among predecessor arcs is negative, so detection does not have to
/// wait out all n passes.
pub fn find_negative_cycle(res: &ResidualGraph) -> Option<Vec<usize>> {
    let n = res.vertex_count;
    if n == 0 {
        return None;
    }
    let mut dist = vec![0i64; n];
    let mut pred = vec![usize::MAX; n];
    let mut seen_pass = vec![usize::MAX; n];
    let mut walk_id = vec![usize::MAX; n];
    for pass in 0..n {
        let mut relaxed = false;
        for (i, arc) in res.arcs.iter().enumerate() {
            if dist[arc.from] + arc.weight < dist[arc.to] {
                dist[arc.to] = dist[arc.from] + arc.weight;
                pred[arc.to] = i;
                relaxed = true;
            }
        }
        if !relaxed {
            return None;
        }
        for start in 0..n {
            if pred[start] == usize::MAX || seen_pass[start] == pass {
                continue;
            }
            let walk = pass * n + start;
            let mut v = start;
            loop {
                if walk_id[v] == walk {
                    return Some(unwind_cycle(res, &pred, v));
                }
                if seen_pass[v] == pass {
                    break; // joins a chain already cleared this pass
                }
                seen_pass[v] = pass;
                walk_id[v] = walk;
                let a = pred[v];
                if a == usize::MAX {
                    break;
                }
                v = res.arcs[a].from;
            }
        }
    }
    // every pass relaxed something, yet no predecessor cycle appeared: with
    // integer weights that cannot happen after n passes
    unreachable!("relaxation past n passes without a predecessor cycle");
}

fn unwind_cycle(res: &ResidualGraph, pred: &[usize], entry: usize) -> Vec<usize> {
    let mut arcs = Vec::new();
    let mut v = entry;
    loop {
        let a = pred[v];
        arcs.push(a);
        v = res.arcs[a].from;
        if v == entry {
            break;
        }
    }
    arcs.reverse();
    debug_assert!(arcs.iter().map(|&a| res.arcs[a].weight).sum::<i64>() < 0);
    arcs
}

/// Maximum (not merely maximal) eulerian subgraph: seed with the cycle DFS
/// result, then cancel negative cycles until none remain.
pub fn max_eulerian_cycle_canceling(g: &DirectedGraph) -> EulerianSubgraph {
    let mut f = cycle_dfs(g);
    loop {
        let res = ResidualGraph::build(g, &f);
        let Some(cycle) = find_negative_cycle(&res) else {
            break;
        };
        #[cfg(debug_assertions)]
        let expected_gain: i64 = -cycle.iter().map(|&a| res.arcs[a].weight).sum::<i64>();
        #[cfg(debug_assertions)]
        let before = f.len() as i64;
        for &a in &cycle {
            let arc = res.arcs[a];
            if arc.adds {
                f.insert(g, arc.edge);
            } else {
                f.remove(g, arc.edge);
            }
        }
        debug_assert!(f.is_balanced());
        #[cfg(debug_assertions)]
        debug_assert_eq!(f.len() as i64, before + expected_gain);
    }
    f
}

/// The baseline pipeline. Shares only the relief step with [`crate::solve`];
/// the subgraph construction is entirely different, which is what makes the
/// two useful as cross-checks. `options.epsilon` is ignored — the baseline
/// always runs to the exact optimum.
pub fn gupte_min_agony(g: &DirectedGraph, options: &SolveOptions) -> Result<Solution, Error> {
    let f = max_eulerian_cycle_canceling(g);
    let r0 = initial_rank(g, &f)?;
    let mut solver = Solver::new(g, f, r0)?;
    let mut trace = IterationTrace::default();
    if options.trace {
        trace.rows.push(TraceRow {
            iteration: 0,
            agony: solver.agony(),
            eulerian_edges: solver.eulerian_edges(),
            case: 0,
            relieved: 0,
        });
    }
    let mut step = 0usize;
    while solver.agony() > solver.eulerian_edges() as u64 {
        let e = solver
            .select_max_slack_edge()
            .expect("positive duality gap implies a slack edge");
        let relieved = solver.member_slack(e);
        let case = solver.relief(e, options.speedup)?;
        if case == ReliefCase::Augmented {
            return Err(Error::Contract(
                "cycle canceling produced a non-maximum subgraph",
            ));
        }
        step += 1;
        if options.trace {
            trace.rows.push(TraceRow {
                iteration: step,
                agony: solver.agony(),
                eulerian_edges: solver.eulerian_edges(),
                case: case.index(),
                relieved,
            });
        }
    }
    let agony = solver.agony();
    let iterations = solver.iterations();
    let (subgraph, mut rank) = solver.into_parts();
    rank.normalize();
    Ok(Solution {
        eulerian_edges: subgraph.len(),
        rank,
        subgraph,
        agony,
        iterations,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        left_graph, right_graph, seven_cycle, subgraph_from_pairs, EIGHT_CYCLE_EDGES,
    };
    use crate::rank::graph_agony;

    #[test]
    fn residual_arcs_follow_membership() {
        let g = left_graph();
        let f = seven_cycle(&g);
        let res = ResidualGraph::build(&g, &f);
        assert_eq!(res.arcs.len(), g.edge_count());
        for arc in &res.arcs {
            let (u, v) = g.edge(arc.edge);
            if f.contains(arc.edge) {
                assert_eq!((arc.from, arc.to, arc.weight, arc.adds), (v, u, 1, false));
            } else {
                assert_eq!((arc.from, arc.to, arc.weight, arc.adds), (u, v, -1, true));
            }
        }
    }

    #[test]
    fn no_negative_cycle_when_subgraph_is_maximum() {
        let g = left_graph();
        let res = ResidualGraph::build(&g, &seven_cycle(&g));
        assert_eq!(find_negative_cycle(&res), None);
    }

    #[test]
    fn negative_cycle_found_past_a_maximal_non_maximum() {
        let g = right_graph();
        let f = seven_cycle(&g); // maximal in the right graph, one short of maximum
        let res = ResidualGraph::build(&g, &f);
        let cycle = find_negative_cycle(&res).expect("an improving cycle exists");
        let weight: i64 = cycle.iter().map(|&a| res.arcs[a].weight).sum();
        assert!(weight < 0);
        let mut f = f;
        for &a in &cycle {
            let arc = res.arcs[a];
            if arc.adds {
                f.insert(&g, arc.edge);
            } else {
                f.remove(&g, arc.edge);
            }
        }
        assert!(f.is_balanced());
        assert_eq!(f.len() as i64, 7 - weight);
    }

    #[test]
    fn canceling_reaches_the_unique_maximum_of_the_right_graph() {
        let g = right_graph();
        let f = max_eulerian_cycle_canceling(&g);
        assert_eq!(f, subgraph_from_pairs(&g, &EIGHT_CYCLE_EDGES));
    }

    #[test]
    fn canceling_keeps_the_left_graph_untouched() {
        let g = left_graph();
        assert_eq!(max_eulerian_cycle_canceling(&g), seven_cycle(&g));
    }

    #[test]
    fn baseline_agrees_on_the_fixtures() {
        let opts = SolveOptions::default();
        let left = gupte_min_agony(&left_graph(), &opts).unwrap();
        assert_eq!(left.agony, 7);
        assert_eq!(left.eulerian_edges, 7);
        assert_eq!(graph_agony(&left_graph(), &left.rank), 7);

        let right = gupte_min_agony(&right_graph(), &opts).unwrap();
        assert_eq!(right.agony, 8);
        assert_eq!(right.eulerian_edges, 8);
    }

    #[test]
    fn baseline_handles_trivial_graphs() {
        let (g, _) = DirectedGraph::parse_edge_list("", false).unwrap();
        assert_eq!(gupte_min_agony(&g, &SolveOptions::default()).unwrap().agony, 0);
        let (g, _) = DirectedGraph::parse_edge_list("a b", false).unwrap();
        assert_eq!(gupte_min_agony(&g, &SolveOptions::default()).unwrap().agony, 0);
    }
}
