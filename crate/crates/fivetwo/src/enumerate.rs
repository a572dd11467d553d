//! Enumeration of connected graphs up to isomorphism, for n <= 8.
//!
//! Graphs are grown one vertex at a time: every connected graph on k+1
//! vertices arises from a connected graph on k vertices by attaching a new
//! vertex along a nonempty neighbor subset (delete a non-cut vertex to see
//! this). Duplicates are removed by a canonical form.

use crate::graph::Graph;
use crate::oracle::OracleError;
use std::collections::BTreeSet;

pub const MAX_ENUM_N: usize = 8;

/// Canonical code of a graph with n <= 8 vertices: the minimum, over vertex
/// orderings compatible with an iterated-degree partition, of the
/// upper-triangle adjacency bit string. Equal codes iff isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_ENUM_N && n >= 1);
    let cells = refinement_cells(g);
    let total_bits = n * (n - 1) / 2;
    let mut best: Option<u64> = None;
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_orderings(
        g,
        &cells,
        &mut placed,
        &mut used,
        0u64,
        0usize,
        total_bits,
        &mut best,
    );
    best.expect("at least one ordering")
}

/// Vertex classes from iterated neighbor-degree refinement, in a canonical
/// class order. Orderings must place class 0 first, then class 1, etc.
fn refinement_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    loop {
        // signature: (color, sorted neighbor colors)
        let mut sigs: Vec<(u64, Vec<u64>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u64> = g.neighbors(v).map(|w| color[w]).collect();
            nb.sort_unstable();
            sigs.push((color[v], nb));
        }
        let mut distinct: Vec<&(u64, Vec<u64>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let new_color: Vec<u64> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap() as u64)
            .collect();
        if new_color == color {
            break;
        }
        color = new_color;
    }
    let classes: BTreeSet<u64> = color.iter().copied().collect();
    classes
        .into_iter()
        .map(|c| (0..n).filter(|&v| color[v] == c).collect())
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn search_orderings(
    g: &Graph,
    cells: &[Vec<usize>],
    placed: &mut Vec<usize>,
    used: &mut Vec<bool>,
    code: u64,
    bits: usize,
    total_bits: usize,
    best: &mut Option<u64>,
) {
    let pos = placed.len();
    if pos == g.n() {
        debug_assert_eq!(bits, total_bits);
        if best.map_or(true, |b| code < b) {
            *best = Some(code);
        }
        return;
    }
    // prefix prune: if the code so far already exceeds the best's prefix,
    // no completion can win
    if let Some(b) = *best {
        if bits > 0 && code > (b >> (total_bits - bits)) {
            return;
        }
    }
    // which cell does this position draw from
    let mut acc = 0;
    let mut cell = 0;
    for (i, c) in cells.iter().enumerate() {
        if pos < acc + c.len() {
            cell = i;
            break;
        }
        acc += c.len();
    }
    for &v in &cells[cell] {
        if used[v] {
            continue;
        }
        let mut ncode = code;
        for &w in placed.iter() {
            ncode = (ncode << 1) | u64::from(g.has_edge(v, w));
        }
        used[v] = true;
        placed.push(v);
        search_orderings(g, cells, placed, used, ncode, bits + pos, total_bits, best);
        placed.pop();
        used[v] = false;
    }
}

/// Rebuilds a graph from a canonical code.
fn decode(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    let total_bits = n * (n - 1) / 2;
    let mut bit = total_bits;
    for i in 1..n {
        for j in 0..i {
            bit -= 1;
            if code >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// All connected graphs on exactly n vertices up to isomorphism, filtered by
/// `predicate`. Deterministic order (sorted by canonical code).
pub fn enumerate_small_graphs<F>(n: usize, predicate: F) -> Result<Vec<Graph>, OracleError>
where
    F: Fn(&Graph) -> bool,
{
    if n > MAX_ENUM_N {
        return Err(OracleError::TooLarge(n, MAX_ENUM_N));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(canonical_code(&Graph::new(1, &[]).unwrap()));
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let parent = decode(k - 1, code);
            for subset in 1u32..(1 << (k - 1)) {
                let mut child = Graph::empty(k);
                for (u, v) in parent.edges() {
                    child.add_edge(u, v);
                }
                for j in 0..k - 1 {
                    if subset >> j & 1 == 1 {
                        child.add_edge(k - 1, j);
                    }
                }
                next.insert(canonical_code(&child));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|code| decode(n, code))
        .filter(|g| predicate(g))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exceptional::{is_isomorphic, ExceptionalKind};

    #[test]
    fn connected_graph_counts() {
        // known counts of connected graphs up to isomorphism
        let want = [1usize, 1, 2, 6, 21, 112];
        for (i, &w) in want.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_small_graphs(n, |_| true).unwrap().len();
            assert_eq!(got, w, "n = {}", n);
        }
    }

    #[test]
    fn n3_connected_is_path_and_triangle() {
        let gs = enumerate_small_graphs(3, |_| true).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.iter().any(|g| is_isomorphic(g, &Graph::path(3))));
        assert!(gs.iter().any(|g| is_isomorphic(g, &Graph::cycle(3))));
    }

    #[test]
    fn n4_min_degree_two() {
        let gs = enumerate_small_graphs(4, |g| g.min_degree().unwrap() >= 2).unwrap();
        assert_eq!(gs.len(), 3); // C4, diamond, K4
        assert!(gs.iter().any(|g| is_isomorphic(g, &Graph::cycle(4))));
        assert!(gs.iter().any(|g| is_isomorphic(g, &Graph::complete(4))));
    }

    #[test]
    fn exactly_one_k23_on_five_vertices() {
        let k23 = ExceptionalKind::K23.reference();
        let gs = enumerate_small_graphs(5, |g| is_isomorphic(g, &k23)).unwrap();
        assert_eq!(gs.len(), 1);
    }

    #[test]
    fn canonical_code_is_relabel_invariant() {
        let g = ExceptionalKind::G2.reference();
        let perm = [6usize, 2, 4, 0, 1, 5, 3];
        let mut h = Graph::empty(7);
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn rejects_large_n() {
        assert!(enumerate_small_graphs(9, |_| true).is_err());
    }
}
