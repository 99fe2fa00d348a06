//! The primal-dual core: one `relief` step erases the slack of a chosen
//! member edge, and the outer loop repeats until agony meets the subgraph
//! size (a joint optimality certificate) or an approximation bound is hit.
//!
//! Relief on a member edge (p, s) with positive slack floods pending raises
//! t(v) outward from p through an integer bucket queue:
//!   - processing u applies r(u) += t(u);
//!   - a remainder edge (u, v) that would turn backward offers v the raise
//!     r(u) + 1 - r(v);
//!   - a member edge (w, u) whose slack would grow offers w the growth.
//! Offers never exceed the priority being processed, so popped priorities
//! are non-increasing and each vertex is processed at most once.
//!
//! If s never needs a raise, the rank shift alone removed the slack
//! (case 1). If s was reached (t(s) > 0), the parent links from s back to p
//! trace an augmenting path: flipping membership along it and dropping
//! (p, s) yields a strictly larger eulerian subgraph whose fresh members
//! carry no slack (case 2).
//!
//! With the speedup flag, the drain stops once the queue maximum falls to
//! t(s) and every applied raise is lowered by t(s) afterwards; s itself is
//! never raised. Final agony is identical either way, final ranks need not
//! be.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::eulerian::{cycle_dfs, initial_rank, is_maximal_eulerian, EulerianSubgraph};
use crate::graph::DirectedGraph;
use crate::rank::{conforms, edge_slack, graph_agony, RankFunction, Ratio};
use crate::Error;

/// How a relief call ended: a pure rank shift, or an augmentation that grew
/// the subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReliefCase {
    RankOnly,
    Augmented,
}

impl ReliefCase {
    /// 1 for a rank shift, 2 for an augmentation (the trace encoding).
    pub fn index(self) -> u8 {
        match self {
            ReliefCase::RankOnly => 1,
            ReliefCase::Augmented => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceRow {
    pub iteration: usize,
    pub agony: u64,
    pub eulerian_edges: usize,
    /// 0 on the initial row, otherwise 1 or 2.
    pub case: u8,
    /// Slack of the relieved edge at the start of the iteration.
    pub relieved: u64,
}

/// Per-iteration scores; row 0 is the state before the first relief call.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IterationTrace {
    pub rows: Vec<TraceRow>,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Stop once agony / |E(H)| <= 1 + epsilon. Zero means run to the exact
    /// optimum.
    pub epsilon: Ratio,
    pub speedup: bool,
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            epsilon: Ratio::zero(),
            speedup: true,
            trace: false,
        }
    }
}

/// Result of a full run: the rank function plus its certificate pair.
/// `eulerian_edges <= agony` always; equality proves both sides optimal.
#[derive(Debug, Clone)]
pub struct Solution {
    pub rank: RankFunction,
    pub subgraph: EulerianSubgraph,
    pub agony: u64,
    pub eulerian_edges: usize,
    pub iterations: usize,
    pub trace: IterationTrace,
}

/// Monotone integer priority queue: an array of vertex buckets indexed by
/// priority with a descending max pointer. Entries superseded by a higher
/// offer or already-processed vertices are skipped lazily on pop.
#[derive(Debug, Default)]
struct BucketQueue {
    buckets: Vec<Vec<usize>>,
    top: usize,
    dirty: Vec<usize>,
}

impl BucketQueue {
    fn prepare(&mut self, max_priority: usize) {
        for &b in &self.dirty {
            self.buckets[b].clear();
        }
        self.dirty.clear();
        if self.buckets.len() <= max_priority {
            self.buckets.resize_with(max_priority + 1, Vec::new);
        }
        self.top = max_priority;
    }

    fn push(&mut self, v: usize, priority: usize) {
        debug_assert!(priority >= 1 && priority <= self.top);
        self.dirty.push(priority);
        self.buckets[priority].push(v);
    }

    fn pop(&mut self, t: &[i64], visited: &[bool]) -> Option<(usize, usize)> {
        loop {
            while self.top > 0 && self.buckets[self.top].is_empty() {
                self.top -= 1;
            }
            if self.top == 0 {
                return None;
            }
            let p = self.top;
            let v = self.buckets[p].pop().unwrap();
            if !visited[v] && t[v] == p as i64 {
                return Some((v, p));
            }
        }
    }
}

/// Member-edge slacks bucketed by value, for O(1)-ish max queries with
/// deterministic lowest-index tie-breaking. Only positive slacks occupy
/// buckets; `slack_of` is authoritative for members and zero elsewhere.
#[derive(Debug)]
struct SlackRegistry {
    slack_of: Vec<u64>,
    buckets: Vec<BTreeSet<usize>>,
    max_slack: usize,
    positive_edges: usize,
    total_slack: u64,
}

impl SlackRegistry {
    fn new(edge_count: usize) -> Self {
        Self {
            slack_of: vec![0; edge_count],
            buckets: Vec::new(),
            max_slack: 0,
            positive_edges: 0,
            total_slack: 0,
        }
    }

    fn insert(&mut self, e: usize, slack: u64) {
        debug_assert_eq!(self.slack_of[e], 0);
        self.slack_of[e] = slack;
        if slack > 0 {
            let s = slack as usize;
            if s >= self.buckets.len() {
                self.buckets.resize_with(s + 1, BTreeSet::new);
            }
            self.buckets[s].insert(e);
            self.positive_edges += 1;
            self.total_slack += slack;
            if s > self.max_slack {
                self.max_slack = s;
            }
        }
    }

    fn remove(&mut self, e: usize) {
        let old = self.slack_of[e];
        if old > 0 {
            self.buckets[old as usize].remove(&e);
            self.positive_edges -= 1;
            self.total_slack -= old;
            while self.max_slack > 0 && self.buckets[self.max_slack].is_empty() {
                self.max_slack -= 1;
            }
        }
        self.slack_of[e] = 0;
    }

    fn update(&mut self, e: usize, slack: u64) {
        if self.slack_of[e] != slack {
            self.remove(e);
            self.insert(e, slack);
        }
    }

    fn select_max(&self) -> Option<usize> {
        if self.max_slack == 0 {
            None
        } else {
            self.buckets[self.max_slack].first().copied()
        }
    }
}

/// Owns the evolving (subgraph, rank) pair and the bookkeeping that keeps
/// each relief call O(m + slack): pending raises, parent links, the bucket
/// queue, the slack registry, and running agony / |E(H)| totals.
pub struct Solver<'g> {
    g: &'g DirectedGraph,
    h: EulerianSubgraph,
    r: RankFunction,
    registry: SlackRegistry,
    agony: u64,
    iterations: usize,
    t: Vec<i64>,
    parent_edge: Vec<usize>,
    visited: Vec<bool>,
    touched: Vec<usize>,
    queue: BucketQueue,
}

impl<'g> Solver<'g> {
    /// Validates the pair: `h` must be a maximal eulerian subgraph of `g`
    /// and `r` must conform to it (every backward edge a member).
    pub fn new(g: &'g DirectedGraph, h: EulerianSubgraph, r: RankFunction) -> Result<Self, Error> {
        if r.len() != g.vertex_count() {
            return Err(Error::Contract("rank length must match vertex count"));
        }
        if h.edge_capacity() != g.edge_count() {
            return Err(Error::Contract("subgraph does not belong to this graph"));
        }
        if !h.is_balanced() {
            return Err(Error::Contract("subgraph is not eulerian"));
        }
        if !conforms(&r, &h, g) {
            return Err(Error::Contract("rank does not conform to the subgraph"));
        }
        if !is_maximal_eulerian(g, &h) {
            return Err(Error::Contract("subgraph is not maximal"));
        }
        let mut registry = SlackRegistry::new(g.edge_count());
        for e in h.edge_indices() {
            let (u, v) = g.edge(e);
            registry.insert(e, edge_slack(&r, u, v));
        }
        let agony = graph_agony(g, &r);
        debug_assert_eq!(agony, h.len() as u64 + registry.total_slack);
        let n = g.vertex_count();
        Ok(Self {
            g,
            h,
            r,
            registry,
            agony,
            iterations: 0,
            t: vec![0; n],
            parent_edge: vec![usize::MAX; n],
            visited: vec![false; n],
            touched: Vec::new(),
            queue: BucketQueue::default(),
        })
    }

    pub fn agony(&self) -> u64 {
        self.agony
    }

    pub fn eulerian_edges(&self) -> usize {
        self.h.len()
    }

    pub fn rank(&self) -> &RankFunction {
        &self.r
    }

    pub fn subgraph(&self) -> &EulerianSubgraph {
        &self.h
    }

    /// Relief calls performed so far.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn max_slack(&self) -> u64 {
        self.registry.max_slack as u64
    }

    pub fn positive_slack_edges(&self) -> usize {
        self.registry.positive_edges
    }

    /// Current slack of a member edge (0 for non-members).
    pub fn member_slack(&self, e: usize) -> u64 {
        self.registry.slack_of[e]
    }

    /// A member edge of maximum slack, ties broken by lowest edge index;
    /// None exactly when every member is slack-free, i.e. agony == |E(H)|.
    pub fn select_max_slack_edge(&self) -> Option<usize> {
        self.registry.select_max()
    }

    /// One primal-dual step on the member edge `edge`, which must have
    /// positive slack. See the module header for the contract.
    pub fn relief(&mut self, edge: usize, speedup: bool) -> Result<ReliefCase, Error> {
        if edge >= self.g.edge_count() || !self.h.contains(edge) {
            return Err(Error::Contract("relief edge must be a subgraph member"));
        }
        let (p, s) = self.g.edge(edge);
        let slack0 = edge_slack(&self.r, p, s);
        if slack0 == 0 {
            return Err(Error::Contract("relief edge must have positive slack"));
        }
        debug_assert_eq!(self.registry.slack_of[edge], slack0);
        debug_assert!(conforms(&self.r, &self.h, self.g));
        let entry_positive = self.registry.positive_edges;
        let entry_max = self.registry.max_slack;
        let entry_agony = self.agony;
        let entry_members = self.h.len();

        for &v in &self.touched {
            self.t[v] = 0;
            self.parent_edge[v] = usize::MAX;
            self.visited[v] = false;
        }
        self.touched.clear();
        self.queue.prepare(slack0 as usize);
        let mut raised: Vec<usize> = Vec::new();

        self.t[p] = slack0 as i64;
        self.touched.push(p);
        self.queue.push(p, slack0 as usize);

        #[cfg(debug_assertions)]
        let mut prev_priority = usize::MAX;
        while let Some((u, pu)) = self.queue.pop(&self.t, &self.visited) {
            if speedup && (pu as i64) <= self.t[s] {
                break;
            }
            #[cfg(debug_assertions)]
            {
                debug_assert!(pu <= prev_priority, "pop priorities must not increase");
                prev_priority = pu;
            }
            self.visited[u] = true;
            self.r.ranks[u] += self.t[u];
            raised.push(u);

            for (&e, &v) in self.g.out_edges(u).iter().zip(self.g.out_heads(u)) {
                if self.h.contains(e) {
                    continue;
                }
                if self.visited[v] {
                    continue;
                }
                // would the remainder edge (u, v) turn backward?
                let offer = self.r.rank(u) + 1 - self.r.rank(v);
                debug_assert!(offer <= pu as i64);
                if offer > self.t[v] {
                    self.t[v] = offer;
                    self.parent_edge[v] = e;
                    self.touched.push(v);
                    self.queue.push(v, offer as usize);
                }
            }
            for (&e, &w) in self.g.in_edges(u).iter().zip(self.g.in_tails(u)) {
                if !self.h.contains(e) {
                    continue;
                }
                if self.visited[w] {
                    continue;
                }
                // slack growth of member edge (w, u) relative to call entry;
                // the registry keeps entry slacks until the drain finishes.
                let entry = self.registry.slack_of[e];
                let now = (self.r.rank(u) - self.r.rank(w) - 1).max(0) as u64;
                if now > entry {
                    let offer = (now - entry) as i64;
                    debug_assert!(offer <= pu as i64);
                    if offer > self.t[w] {
                        self.t[w] = offer;
                        self.parent_edge[w] = e;
                        self.touched.push(w);
                        self.queue.push(w, offer as usize);
                    }
                }
            }
        }

        let case = if self.t[s] > 0 {
            ReliefCase::Augmented
        } else {
            ReliefCase::RankOnly
        };

        if speedup && self.t[s] > 0 {
            // Pruned vertices kept their pending raises below t(s), so
            // lowering every applied raise by t(s) restores conformance
            // without touching them. s itself was never raised.
            let ts = self.t[s];
            for &v in &raised {
                self.r.ranks[v] -= ts;
            }
        }

        if case == ReliefCase::Augmented {
            // Parent links run from s back to p: remainder edges point
            // parent -> child, member edges child -> parent. Flip membership
            // along the path and drop (p, s).
            let mut path: Vec<usize> = Vec::new();
            let mut c = s;
            while c != p {
                let e = self.parent_edge[c];
                debug_assert_ne!(e, usize::MAX, "augmenting path must reach p");
                path.push(e);
                let (a, b) = self.g.edge(e);
                c = if self.h.contains(e) {
                    debug_assert_eq!(a, c);
                    b
                } else {
                    debug_assert_eq!(b, c);
                    a
                };
            }
            for &e in &path {
                if self.h.contains(e) {
                    self.h.remove(self.g, e);
                    self.registry.remove(e);
                } else {
                    self.h.insert(self.g, e);
                    let (a, b) = self.g.edge(e);
                    let slack = edge_slack(&self.r, a, b);
                    debug_assert_eq!(slack, 0, "fresh members enter slack-free");
                    self.registry.insert(e, slack);
                }
            }
            self.h.remove(self.g, edge);
            self.registry.remove(edge);
            debug_assert!(self.h.len() > entry_members);
        }

        for &v in &raised {
            for (&e, &head) in self.g.out_edges(v).iter().zip(self.g.out_heads(v)) {
                if self.h.contains(e) {
                    self.registry.update(e, edge_slack(&self.r, v, head));
                }
            }
            for (&e, &tail) in self.g.in_edges(v).iter().zip(self.g.in_tails(v)) {
                if self.h.contains(e) {
                    self.registry.update(e, edge_slack(&self.r, tail, v));
                }
            }
        }
        // gap identity: against a maximal subgraph and a conforming rank,
        // agony is the member count plus the members' total slack
        self.agony = self.h.len() as u64 + self.registry.total_slack;
        self.iterations += 1;

        debug_assert!(self.registry.positive_edges < entry_positive);
        debug_assert!(self.registry.max_slack <= entry_max);
        debug_assert!(self.h.len() as u64 <= self.agony);
        if case == ReliefCase::RankOnly {
            debug_assert_eq!(self.h.len(), entry_members);
            debug_assert!(entry_agony >= self.agony + slack0);
        }
        #[cfg(debug_assertions)]
        {
            debug_assert_eq!(self.agony, graph_agony(self.g, &self.r));
            debug_assert!(conforms(&self.r, &self.h, self.g));
            debug_assert!(is_maximal_eulerian(self.g, &self.h));
            debug_assert!(self.r.ranks.iter().all(|&x| x < i64::MAX / 4));
        }
        Ok(case)
    }

    /// Relieves the max-slack edge until agony == |E(H)| (exact) or the
    /// epsilon bound is certified. Ranks are normalized to min 0 at the end.
    pub fn run(&mut self, options: &SolveOptions) -> IterationTrace {
        let mut trace = IterationTrace::default();
        if options.trace {
            trace.rows.push(TraceRow {
                iteration: 0,
                agony: self.agony,
                eulerian_edges: self.h.len(),
                case: 0,
                relieved: 0,
            });
        }
        let mut step = 0usize;
        loop {
            if self.agony == self.h.len() as u64 {
                break;
            }
            if options.epsilon.is_positive() && self.within_bound(&options.epsilon) {
                break;
            }
            let e = self
                .select_max_slack_edge()
                .expect("positive duality gap implies a slack edge");
            let relieved = self.registry.slack_of[e];
            let case = self
                .relief(e, options.speedup)
                .expect("selected edge meets relief preconditions");
            step += 1;
            debug_assert!(step <= self.g.edge_count());
            if options.trace {
                trace.rows.push(TraceRow {
                    iteration: step,
                    agony: self.agony,
                    eulerian_edges: self.h.len(),
                    case: case.index(),
                    relieved,
                });
            }
        }
        self.r.normalize();
        trace
    }

    fn within_bound(&self, eps: &Ratio) -> bool {
        // agony / |F| <= 1 + eps  <=>  agony * den <= |F| * (den + num)
        let f = self.h.len() as u128;
        if f == 0 {
            return false;
        }
        (self.agony as u128) * (eps.den as u128) <= f * (eps.den as u128 + eps.num as u128)
    }

    pub fn into_parts(self) -> (EulerianSubgraph, RankFunction) {
        (self.h, self.r)
    }
}

/// Drains all slack from a given maximal pair. See [`Solver`] for the
/// stepping API; this is the one-shot form.
pub fn min_agony(
    g: &DirectedGraph,
    h0: EulerianSubgraph,
    r0: RankFunction,
    options: &SolveOptions,
) -> Result<Solution, Error> {
    let mut solver = Solver::new(g, h0, r0)?;
    let trace = solver.run(options);
    let agony = solver.agony();
    let iterations = solver.iterations();
    let (subgraph, rank) = solver.into_parts();
    Ok(Solution {
        eulerian_edges: subgraph.len(),
        rank,
        subgraph,
        agony,
        iterations,
        trace,
    })
}

/// Full pipeline: maximal subgraph by cycle DFS, layered initial rank, then
/// the relief loop. Exact optimum unless `options.epsilon` stops it early.
pub fn solve(g: &DirectedGraph, options: &SolveOptions) -> Result<Solution, Error> {
    let h0 = cycle_dfs(g);
    let r0 = initial_rank(g, &h0)?;
    min_agony(g, h0, r0, options)
}
