//! Directed multigraph with dense internal ids and stable edge order.
//!
//! Input is SNAP-style edge-list text: '#' lines are comments, data lines
//! hold two whitespace-separated tokens (source, target). Tokens are
//! arbitrary non-whitespace strings; internal ids are assigned in first
//! appearance order, which makes loading deterministic. Self-loops are
//! dropped (and counted) during load; parallel edges are kept unless the
//! dedupe flag is set.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::eulerian::EulerianSubgraph;
use crate::Error;

/// Immutable directed multigraph. Vertices are `0..vertex_count()`, edges
/// are indexed `0..edge_count()` in input order; adjacency lists hold edge
/// indices in ascending order.
#[derive(Debug, Clone)]
pub struct DirectedGraph {
    edges: Vec<(usize, usize)>,
    out_start: Vec<usize>,
    out_edge_ids: Vec<usize>,
    // head vertex of out_edge_ids[i]; keeps adjacency scans off the edges
    // array, which they'd otherwise hit at random
    out_heads: Vec<usize>,
    in_start: Vec<usize>,
    in_edge_ids: Vec<usize>,
    in_tails: Vec<usize>,
    labels: Vec<String>,
    ids: BTreeMap<String, usize>,
}

/// What `parse_edge_list` threw away.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

impl DirectedGraph {
    /// Builds a graph over vertices `0..vertex_count` with stringified ids as
    /// labels. Rejects self-loops and out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Contract("edge endpoint out of range"));
            }
            if u == v {
                return Err(Error::Contract("self-loops are not allowed"));
            }
        }
        let labels: Vec<String> = (0..vertex_count).map(|v| v.to_string()).collect();
        let ids = labels
            .iter()
            .enumerate()
            .map(|(v, l)| (l.clone(), v))
            .collect();
        Ok(Self::build(edges, labels, ids))
    }

    /// Parses SNAP-style edge-list text. Lines starting with '#' are
    /// comments, blank lines are skipped, anything else must be exactly two
    /// whitespace-separated tokens. Empty input yields the empty graph.
    pub fn parse_edge_list(text: &str, dedupe: bool) -> Result<(Self, LoadStats), Error> {
        let mut labels: Vec<String> = Vec::new();
        let mut ids: BTreeMap<String, usize> = BTreeMap::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut stats = LoadStats::default();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();

        let intern = |token: &str, labels: &mut Vec<String>, ids: &mut BTreeMap<String, usize>| {
            if let Some(&id) = ids.get(token) {
                return id;
            }
            let id = labels.len();
            labels.push(token.to_string());
            ids.insert(token.to_string(), id);
            id
        };

        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (src, dst) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(s), Some(d), None) => (s, d),
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: "expected two whitespace-separated tokens".to_string(),
                    })
                }
            };
            let u = intern(src, &mut labels, &mut ids);
            let v = intern(dst, &mut labels, &mut ids);
            if u == v {
                stats.self_loops_dropped += 1;
                continue;
            }
            if dedupe && !seen.insert((u, v)) {
                stats.duplicates_dropped += 1;
                continue;
            }
            edges.push((u, v));
        }
        Ok((Self::build(edges, labels, ids), stats))
    }

    fn build(edges: Vec<(usize, usize)>, labels: Vec<String>, ids: BTreeMap<String, usize>) -> Self {
        let n = labels.len();
        let m = edges.len();
        let mut out_start = vec![0usize; n + 1];
        let mut in_start = vec![0usize; n + 1];
        for &(u, v) in &edges {
            out_start[u + 1] += 1;
            in_start[v + 1] += 1;
        }
        for i in 0..n {
            out_start[i + 1] += out_start[i];
            in_start[i + 1] += in_start[i];
        }
        let mut out_edge_ids = vec![0usize; m];
        let mut out_heads = vec![0usize; m];
        let mut in_edge_ids = vec![0usize; m];
        let mut in_tails = vec![0usize; m];
        let mut out_cursor = out_start.clone();
        let mut in_cursor = in_start.clone();
        for (e, &(u, v)) in edges.iter().enumerate() {
            out_edge_ids[out_cursor[u]] = e;
            out_heads[out_cursor[u]] = v;
            out_cursor[u] += 1;
            in_edge_ids[in_cursor[v]] = e;
            in_tails[in_cursor[v]] = u;
            in_cursor[v] += 1;
        }
        Self {
            edges,
            out_start,
            out_edge_ids,
            out_heads,
            in_start,
            in_edge_ids,
            in_tails,
            labels,
            ids,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints (source, target) of edge `e`.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Outgoing edge indices of `v`, ascending.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edge_ids[self.out_start[v]..self.out_start[v + 1]]
    }

    /// Head vertices parallel to `out_edges(v)`: `out_heads(v)[i]` is the
    /// target of edge `out_edges(v)[i]`.
    pub fn out_heads(&self, v: usize) -> &[usize] {
        &self.out_heads[self.out_start[v]..self.out_start[v + 1]]
    }

    /// Incoming edge indices of `v`, ascending.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edge_ids[self.in_start[v]..self.in_start[v + 1]]
    }

    /// Source vertices parallel to `in_edges(v)`.
    pub fn in_tails(&self, v: usize) -> &[usize] {
        &self.in_tails[self.in_start[v]..self.in_start[v + 1]]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_id(&self, label: &str) -> Option<usize> {
        self.ids.get(label).copied()
    }

    /// Lowest-index edge u -> v, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.out_edges(u)
            .iter()
            .zip(self.out_heads(u))
            .find(|&(_, &head)| head == v)
            .map(|(&e, _)| e)
    }

    /// Edge indices of E \ F in ascending order. `f` must belong to this
    /// graph (same edge capacity).
    pub fn remainder_edges<'a>(
        &'a self,
        f: &'a EulerianSubgraph,
    ) -> impl Iterator<Item = usize> + 'a {
        assert_eq!(
            f.edge_capacity(),
            self.edge_count(),
            "subgraph does not belong to this graph"
        );
        (0..self.edge_count()).filter(move |&e| !f.contains(e))
    }

    /// Serializes back to edge-list text, one "src<TAB>dst" line per edge in
    /// edge order. Reloading the result reproduces the edge multiset.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.labels[u]);
            out.push('\t');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }
}
