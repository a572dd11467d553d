//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {0} out of range for {1} vertices")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
}

/// Finite simple undirected graph. Adjacency is kept as sorted sets so every
/// iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::EndpointOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::EndpointOutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Panicking variant for internally constructed graphs.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_edge_checked(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n())
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::Empty)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        (0..self.n())
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::Empty)
    }

    /// Sanity pass: no self-loops, adjacency symmetric. Generators call this in tests.
    pub fn validate(&self) -> bool {
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if v == u || v >= self.n() || !self.adj[v].contains(&u) {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `s` (sorted, deduplicated internally).
    /// Returns the subgraph together with the map new id -> old id.
    pub fn induced(&self, s: &[usize]) -> (Graph, Vec<usize>) {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && index[w] != usize::MAX {
                    g.add_edge(i, index[w]);
                }
            }
        }
        (g, verts)
    }

    /// Graph with the listed vertices deleted; returns the new->old id map.
    pub fn delete_vertices(&self, del: &[usize]) -> (Graph, Vec<usize>) {
        let dels: BTreeSet<usize> = del.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n()).filter(|v| !dels.contains(v)).collect();
        self.induced(&keep)
    }

    /// True iff no vertex has `t` pairwise non-adjacent neighbors
    /// (no induced K_{1,t}). Exact backtracking search inside each neighborhood.
    pub fn is_claw_free(&self, t: usize) -> bool {
        self.find_induced_star_center(t).is_none()
    }

    pub fn is_k16_free(&self) -> bool {
        self.is_claw_free(6)
    }

    /// Finds (center, leaves) of an induced K_{1,t} if one exists.
    pub fn find_induced_star_center(&self, t: usize) -> Option<(usize, Vec<usize>)> {
        for v in 0..self.n() {
            if self.degree(v) < t {
                continue;
            }
            let nbrs: Vec<usize> = self.neighbors(v).collect();
            let mut chosen = Vec::new();
            if self.independent_subset(&nbrs, 0, t, &mut chosen) {
                return Some((v, chosen));
            }
        }
        None
    }

    fn independent_subset(
        &self,
        pool: &[usize],
        from: usize,
        want: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == want {
            return true;
        }
        if pool.len() - from < want - chosen.len() {
            return false;
        }
        for i in from..pool.len() {
            let c = pool[i];
            if chosen.iter().all(|&x| !self.has_edge(x, c)) {
                chosen.push(c);
                if self.independent_subset(pool, i + 1, want, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// Cycle on n vertices, in id order.
    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Path on n vertices, in id order.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Complete bipartite K_{a,b}: part A = 0..a, part B = a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for i in 0..a {
            for j in 0..b {
                g.add_edge(i, a + j);
            }
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Cut vertices (articulation points), sorted.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut cuts = vec![false; n];
        let mut time = 0usize;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS
            let mut stack: Vec<(usize, Vec<usize>)> =
                vec![(root, self.neighbors(root).collect())];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0usize;
            while let Some((v, rest)) = stack.last_mut() {
                if let Some(w) = rest.pop() {
                    let v = *v;
                    if disc[w] == usize::MAX {
                        parent[w] = v;
                        if v == root {
                            root_children += 1;
                        }
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, self.neighbors(w).collect()));
                    } else if w != parent[v] {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let v = *v;
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            cuts[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cuts[root] = true;
            }
        }
        (0..n).filter(|&v| cuts[v]).collect()
    }

    /// Bridges (cut edges), as (u, v) with u < v, sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            let mut g = self.clone();
            g.remove_edge(u, v);
            // u and v end up in different components iff uv was a bridge
            let mut seen = vec![false; g.n()];
            let mut stack = vec![u];
            seen[u] = true;
            while let Some(x) = stack.pop() {
                for w in g.neighbors(x) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if !seen[v] {
                out.push((u, v));
            }
        }
        out
    }
}
