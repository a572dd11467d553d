//! Exact backtracking decision procedure for configurability, plus the
//! maximum label count achievable with pairs. Ground truth for everything
//! else at small scale.

use crate::graph::Graph;
use crate::labeling::{Configuration, LabelPair, ALL_PAIRS, FULL_MASK};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("graph too large for enumeration: {0} > {1}")]
    TooLarge(usize, usize),
}

#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            node_limit: 100_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Configurable(Configuration),
    NotConfigurable,
    BudgetExceeded,
}

impl OracleResult {
    pub fn is_configurable(&self) -> bool {
        matches!(self, OracleResult::Configurable(_))
    }
}

/// A backtracking search instance. `min_seen[v]` is how many labels of
/// `target_mask` must appear on N[v]; 5 with the full mask means satisfied.
struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    pairs: Vec<LabelPair>,
    target_mask: u8,
    min_seen: Vec<u8>,
    pruning: bool,
    seen: Vec<u8>,
    unassigned: Vec<u8>,
    assignment: Vec<Option<LabelPair>>,
    nodes: u64,
    budget: OracleBudget,
    started: Instant,
    exceeded: bool,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        pairs: Vec<LabelPair>,
        target_mask: u8,
        min_seen: Vec<u8>,
        pruning: bool,
        budget: OracleBudget,
    ) -> Self {
        Search {
            g,
            order: bfs_order(g),
            pairs,
            target_mask,
            min_seen,
            pruning,
            seen: vec![0; g.n()],
            unassigned: (0..g.n()).map(|v| g.degree(v) as u8 + 1).collect(),
            assignment: vec![None; g.n()],
            nodes: 0,
            budget,
            started: Instant::now(),
            exceeded: false,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.exceeded {
            return true;
        }
        if self.nodes > self.budget.node_limit
            || (self.nodes % 4096 == 0 && self.started.elapsed() > self.budget.time_limit)
        {
            self.exceeded = true;
        }
        self.exceeded
    }

    fn viable(&self, w: usize) -> bool {
        let seen_count = (self.seen[w] & self.target_mask).count_ones() as u8;
        let need = self.min_seen[w].saturating_sub(seen_count);
        if self.unassigned[w] == 0 {
            return need == 0;
        }
        !self.pruning || 2 * self.unassigned[w] >= need
    }

    fn run(&mut self) -> bool {
        self.place(0)
    }

    fn place(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for pi in 0..self.pairs.len() {
            let p = self.pairs[pi];
            self.nodes += 1;
            if self.out_of_budget() {
                return false;
            }
            self.assignment[v] = Some(p);
            let mask = p.mask();
            self.seen[v] |= mask;
            self.unassigned[v] -= 1;
            let mut ok = self.viable(v);
            let nbrs: Vec<usize> = self.g.neighbors(v).collect();
            for &w in &nbrs {
                self.seen[w] |= mask;
                self.unassigned[w] -= 1;
            }
            if ok {
                for &w in &nbrs {
                    if !self.viable(w) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.place(idx + 1) {
                return true;
            }
            // undo; seen masks are rebuilt from scratch for the touched set
            self.assignment[v] = None;
            self.unassigned[v] += 1;
            for &w in &nbrs {
                self.unassigned[w] += 1;
            }
            self.recompute_seen(v);
            for &w in &nbrs {
                self.recompute_seen(w);
            }
        }
        false
    }

    fn recompute_seen(&mut self, w: usize) {
        let mut m = self.assignment[w].map_or(0, |p| p.mask());
        for x in self.g.neighbors(w) {
            if let Some(p) = self.assignment[x] {
                m |= p.mask();
            }
        }
        self.seen[w] = m;
    }
}

/// Branching order: BFS from a maximum-degree vertex, ties by smallest id,
/// restarted per component. Keeps closed neighborhoods completing early.
pub fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    loop {
        let start = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (g.degree(v), usize::MAX - v));
        let Some(start) = start else { break };
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        visited[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

pub fn exact_solve(g: &Graph, budget: OracleBudget) -> OracleResult {
    exact_solve_with_options(g, budget, true)
}

/// `pruning = false` disables the lookahead feasibility prune, leaving only
/// the completed-neighborhood check. Used to validate pruning safety.
pub fn exact_solve_with_options(g: &Graph, budget: OracleBudget, pruning: bool) -> OracleResult {
    let mut s = Search::new(
        g,
        ALL_PAIRS.to_vec(),
        FULL_MASK,
        vec![5; g.n()],
        pruning,
        budget,
    );
    run_search(&mut s)
}

/// Searches for an assignment meeting per-vertex coverage targets
/// (`min_seen[v]` labels of {1..5} on N[v]).
pub fn search_with_targets(g: &Graph, min_seen: Vec<u8>, budget: OracleBudget) -> OracleResult {
    let mut s = Search::new(g, ALL_PAIRS.to_vec(), FULL_MASK, min_seen, true, budget);
    run_search(&mut s)
}

fn run_search(s: &mut Search) -> OracleResult {
    if s.run() {
        let pairs = s.assignment.iter().map(|a| a.unwrap()).collect();
        OracleResult::Configurable(Configuration::new(pairs))
    } else if s.exceeded {
        OracleResult::BudgetExceeded
    } else {
        OracleResult::NotConfigurable
    }
}

/// Maximum t such that pairs drawn from {1..t} can put all t labels in every
/// closed neighborhood. Always at least 2 on nonempty graphs.
pub fn d2_max(g: &Graph, budget: OracleBudget) -> Result<usize, OracleError> {
    assert!(g.n() >= 1, "d2_max on empty graph");
    for t in (2..=5u8).rev() {
        let pairs: Vec<LabelPair> = ALL_PAIRS
            .iter()
            .copied()
            .filter(|p| p.hi() <= t)
            .collect();
        let target: u8 = (1 << t) - 1;
        let mut s = Search::new(g, pairs, target, vec![t; g.n()], true, budget);
        if s.run() {
            return Ok(t as usize);
        }
        if s.exceeded {
            return Err(OracleError::BudgetExceeded);
        }
    }
    Ok(2)
}
