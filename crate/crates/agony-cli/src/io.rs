//! File formats: SNAP-style edge lists in, rank TSV and trace CSV out,
//! plus the rank/certificate readers used by `verify`.

use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::fs;
use std::path::Path;

use agony_core::{DirectedGraph, EulerianSubgraph, IterationTrace, LoadStats, RankFunction};

use crate::CliError;

pub fn read_graph(path: &Path, dedupe: bool) -> Result<(DirectedGraph, LoadStats), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    DirectedGraph::parse_edge_list(&text, dedupe)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// One "label<TAB>rank" line per vertex, ascending by rank then label.
/// Smaller rank means higher in the hierarchy.
pub fn ranks_to_tsv(g: &DirectedGraph, r: &RankFunction) -> String {
    let mut rows: Vec<(i64, &str)> = (0..g.vertex_count())
        .map(|v| (r.rank(v), g.label(v)))
        .collect();
    rows.sort();
    let mut out = String::new();
    for (rank, label) in rows {
        out.push_str(label);
        out.push('\t');
        out.push_str(&rank.to_string());
        out.push('\n');
    }
    out
}

pub fn write_ranks(path: &Path, g: &DirectedGraph, r: &RankFunction) -> Result<(), CliError> {
    fs::write(path, ranks_to_tsv(g, r))
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn trace_to_csv(trace: &IterationTrace) -> String {
    let mut out = String::from("iteration,agony,eulerian_edges,case,relieved\n");
    for row in &trace.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.iteration, row.agony, row.eulerian_edges, row.case, row.relieved
        ));
    }
    out
}

pub fn write_trace(path: &Path, trace: &IterationTrace) -> Result<(), CliError> {
    fs::write(path, trace_to_csv(trace))
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Reads a rank TSV back. Structural problems and any mismatch with the
/// graph's vertex set (unknown label, duplicate, missing vertex) are parse
/// errors: the file does not describe a rank function for this graph.
pub fn parse_rank_file(text: &str, g: &DirectedGraph) -> Result<RankFunction, CliError> {
    let mut pairs: Vec<(String, i64)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(label), Some(rank), None) => {
                let rank: i64 = rank.parse().map_err(|_| {
                    CliError::Parse(format!("ranks line {}: bad rank '{rank}'", idx + 1))
                })?;
                pairs.push((label.to_string(), rank));
            }
            _ => {
                return Err(CliError::Parse(format!(
                    "ranks line {}: expected 'label<TAB>rank'",
                    idx + 1
                )));
            }
        }
    }
    RankFunction::from_labeled(g, pairs.iter().map(|(l, r)| (l.as_str(), *r)))
        .map_err(|e| CliError::Parse(format!("ranks: {e}")))
}

pub fn read_rank_file(path: &Path, g: &DirectedGraph) -> Result<RankFunction, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_rank_file(&text, g)
}

/// Reads an eulerian certificate: an edge list in the input format whose
/// lines must map one-to-one onto distinct edges of `g` (parallel edges in
/// the certificate consume parallel edges of the graph). Lines that cannot
/// be matched are verification failures, not parse errors.
pub fn parse_certificate(text: &str, g: &DirectedGraph) -> Result<EulerianSubgraph, CliError> {
    let mut pool: BTreeMap<(usize, usize), VecDeque<usize>> = BTreeMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        pool.entry((u, v)).or_default().push_back(e);
    }
    let mut members: Vec<usize> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (src, dst) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(s), Some(d), None) => (s, d),
            _ => {
                return Err(CliError::Parse(format!(
                    "certificate line {}: expected two tokens",
                    idx + 1
                )));
            }
        };
        let pair = match (g.vertex_id(src), g.vertex_id(dst)) {
            (Some(u), Some(v)) => (u, v),
            _ => {
                return Err(CliError::Verify(format!(
                    "certificate line {}: edge {src} -> {dst} is not in the graph",
                    idx + 1
                )));
            }
        };
        match pool.get_mut(&pair).and_then(VecDeque::pop_front) {
            Some(e) => members.push(e),
            None => {
                return Err(CliError::Verify(format!(
                    "certificate line {}: edge {src} -> {dst} is not in the graph \
                     (or listed more times than it occurs)",
                    idx + 1
                )));
            }
        }
    }
    EulerianSubgraph::from_edge_indices(g, members).map_err(CliError::from)
}

pub fn read_certificate(path: &Path, g: &DirectedGraph) -> Result<EulerianSubgraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_certificate(&text, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use agony_core::TraceRow;

    fn graph() -> DirectedGraph {
        DirectedGraph::parse_edge_list("b a\na c\nc b", false).unwrap().0
    }

    #[test]
    fn tsv_sorts_by_rank_then_label_lexicographically() {
        let (g, _) = DirectedGraph::parse_edge_list("10 9\n9 2", false).unwrap();
        let r = RankFunction::from_labeled(&g, [("10", 1), ("9", 1), ("2", 0)]).unwrap();
        assert_eq!(ranks_to_tsv(&g, &r), "2\t0\n10\t1\n9\t1\n");
    }

    #[test]
    fn rank_file_round_trips() {
        let g = graph();
        let r = RankFunction::from_labeled(&g, [("a", 0), ("b", 1), ("c", 1)]).unwrap();
        let parsed = parse_rank_file(&ranks_to_tsv(&g, &r), &g).unwrap();
        assert_eq!(parsed.ranks, r.ranks);
    }

    #[test]
    fn rank_file_requires_full_coverage() {
        let g = graph();
        assert!(matches!(
            parse_rank_file("a\t0\nb\t1\n", &g),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            parse_rank_file("a\t0\nb\t1\nc\t1\nz\t2\n", &g),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            parse_rank_file("a\tzero\n", &g),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn trace_csv_golden() {
        let trace = IterationTrace {
            rows: vec![
                TraceRow { iteration: 0, agony: 8, eulerian_edges: 7, case: 0, relieved: 0 },
                TraceRow { iteration: 1, agony: 8, eulerian_edges: 8, case: 2, relieved: 1 },
            ],
        };
        assert_eq!(
            trace_to_csv(&trace),
            "iteration,agony,eulerian_edges,case,relieved\n0,8,7,0,0\n1,8,8,2,1\n"
        );
    }

    #[test]
    fn certificate_consumes_parallel_edges_individually() {
        let (g, _) = DirectedGraph::parse_edge_list("a b\na b\nb a\nb a", false).unwrap();
        let h = parse_certificate("a b\nb a\na b\nb a\n", &g).unwrap();
        assert_eq!(h.len(), 4);
        // a fifth occurrence has nothing left to bind to
        assert!(matches!(
            parse_certificate("a b\na b\na b\n", &g),
            Err(CliError::Verify(_))
        ));
    }

    #[test]
    fn certificate_rejects_foreign_edges() {
        let g = graph();
        assert!(matches!(
            parse_certificate("a z\n", &g),
            Err(CliError::Verify(_))
        ));
        assert!(matches!(
            parse_certificate("a b\n", &g), // reversed direction of (b, a)
            Err(CliError::Verify(_))
        ));
        assert!(matches!(
            parse_certificate("a\n", &g),
            Err(CliError::Parse(_))
        ));
    }
}
