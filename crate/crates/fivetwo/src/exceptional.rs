//! The eight connected graphs that admit no valid assignment, and exact
//! isomorphism testing against them.

use crate::graph::{Graph, GraphError};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExceptionalKind {
    C4,
    C7,
    C4dotC4,
    K23,
    G1,
    G2,
    G3,
    G4,
}

pub const ALL_EXCEPTIONAL: [ExceptionalKind; 8] = [
    ExceptionalKind::C4,
    ExceptionalKind::C7,
    ExceptionalKind::C4dotC4,
    ExceptionalKind::K23,
    ExceptionalKind::G1,
    ExceptionalKind::G2,
    ExceptionalKind::G3,
    ExceptionalKind::G4,
];

impl fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExceptionalKind::C4 => "C4",
            ExceptionalKind::C7 => "C7",
            ExceptionalKind::C4dotC4 => "C4.C4",
            ExceptionalKind::K23 => "K2,3",
            ExceptionalKind::G1 => "G1",
            ExceptionalKind::G2 => "G2",
            ExceptionalKind::G3 => "G3",
            ExceptionalKind::G4 => "G4",
        };
        write!(f, "{}", s)
    }
}

impl ExceptionalKind {
    /// Fixed reference copy of this graph.
    ///
    /// C4.C4 uses ids: 0 = shared vertex, squares (0,1,2,3) and (0,4,5,6).
    /// G1..G4 are a 7-cycle 0-1-2-3-4-5-6-0 (0 the apex, 1..3 one side top to
    /// bottom, 4..6 the other side bottom to top) plus chords:
    /// G1 {2-5}, G2 {1-5, 2-6}, G3 {0-3, 0-4}, G4 {1-5, 2-6, 2-5}.
    pub fn reference(&self) -> Graph {
        match self {
            ExceptionalKind::C4 => Graph::cycle(4),
            ExceptionalKind::C7 => Graph::cycle(7),
            ExceptionalKind::C4dotC4 => {
                let mut g = Graph::empty(7);
                for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)] {
                    g.add_edge(u, v);
                }
                g
            }
            ExceptionalKind::K23 => Graph::complete_bipartite(2, 3),
            ExceptionalKind::G1 => c7_with_chords(&[(2, 5)]),
            ExceptionalKind::G2 => c7_with_chords(&[(1, 5), (2, 6)]),
            ExceptionalKind::G3 => c7_with_chords(&[(0, 3), (0, 4)]),
            ExceptionalKind::G4 => c7_with_chords(&[(1, 5), (2, 6), (2, 5)]),
        }
    }

    /// The spanning 7-cycle of the reference copy, for the 7-vertex kinds that
    /// have one (all except C4, K2,3, C4.C4).
    pub fn reference_spanning_c7(&self) -> Option<Vec<usize>> {
        match self {
            ExceptionalKind::C7
            | ExceptionalKind::G1
            | ExceptionalKind::G2
            | ExceptionalKind::G3
            | ExceptionalKind::G4 => Some(vec![0, 1, 2, 3, 4, 5, 6]),
            _ => None,
        }
    }
}

fn c7_with_chords(chords: &[(usize, usize)]) -> Graph {
    let mut g = Graph::cycle(7);
    for &(u, v) in chords {
        g.add_edge(u, v);
    }
    g
}

/// Isomorphism from `pattern` onto `target` by degree-filtered backtracking.
/// Returns map[pattern id] = target id. Intended for graphs this small;
/// there is deliberately no general-purpose engine here.
pub fn find_isomorphism(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    if pattern.n() != target.n() || pattern.m() != target.m() {
        return None;
    }
    let mut pdeg: Vec<usize> = (0..pattern.n()).map(|v| pattern.degree(v)).collect();
    let mut tdeg: Vec<usize> = (0..target.n()).map(|v| target.degree(v)).collect();
    pdeg.sort_unstable();
    tdeg.sort_unstable();
    if pdeg != tdeg {
        return None;
    }
    let n = pattern.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_map(pattern, target, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_map(
    pattern: &Graph,
    target: &Graph,
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if v == pattern.n() {
        return true;
    }
    'cand: for t in 0..target.n() {
        if used[t] || target.degree(t) != pattern.degree(v) {
            continue;
        }
        for w in pattern.neighbors(v) {
            if w < v && !target.has_edge(map[w], t) {
                continue 'cand;
            }
        }
        // also reject extra edges among mapped vertices
        for w in 0..v {
            if !pattern.has_edge(v, w) && target.has_edge(map[w], t) {
                continue 'cand;
            }
        }
        map[v] = t;
        used[t] = true;
        if extend_map(pattern, target, v + 1, map, used) {
            return true;
        }
        used[t] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Which of the eight reference graphs `g` is isomorphic to, if any,
/// together with the map reference id -> g id. `g` must be connected.
pub fn detect_exceptional_mapped(
    g: &Graph,
) -> Result<Option<(ExceptionalKind, Vec<usize>)>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    for kind in ALL_EXCEPTIONAL {
        let r = kind.reference();
        if let Some(map) = find_isomorphism(&r, g) {
            return Ok(Some((kind, map)));
        }
    }
    Ok(None)
}

pub fn detect_exceptional(g: &Graph) -> Result<Option<ExceptionalKind>, GraphError> {
    Ok(detect_exceptional_mapped(g)?.map(|(k, _)| k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detect_c7_from_edge_list() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        assert_eq!(detect_exceptional(&g).unwrap(), Some(ExceptionalKind::C7));
    }

    #[test]
    fn detect_two_squares_sharing_a_vertex() {
        // squares (3,1,0,2) and (3,5,6,4) sharing vertex 3
        let g = Graph::new(
            7,
            &[(3, 1), (1, 0), (0, 2), (2, 3), (3, 5), (5, 6), (6, 4), (4, 3)],
        )
        .unwrap();
        assert_eq!(
            detect_exceptional(&g).unwrap(),
            Some(ExceptionalKind::C4dotC4)
        );
    }

    #[test]
    fn c5_is_not_exceptional() {
        assert_eq!(detect_exceptional(&Graph::cycle(5)).unwrap(), None);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
            .unwrap();
        assert!(detect_exceptional(&g).is_err());
    }

    #[test]
    fn references_are_sane() {
        for kind in ALL_EXCEPTIONAL {
            let r = kind.reference();
            assert!(r.validate());
            assert!(r.is_connected());
            assert!(r.min_degree().unwrap() >= 2);
            assert!(r.is_k16_free());
            assert_eq!(detect_exceptional(&r).unwrap(), Some(kind));
        }
        // expected sizes
        assert_eq!(ExceptionalKind::G1.reference().m(), 8);
        assert_eq!(ExceptionalKind::G2.reference().m(), 9);
        assert_eq!(ExceptionalKind::G3.reference().m(), 9);
        assert_eq!(ExceptionalKind::G4.reference().m(), 10);
        // the eight references are pairwise non-isomorphic
        for (i, a) in ALL_EXCEPTIONAL.iter().enumerate() {
            for b in &ALL_EXCEPTIONAL[i + 1..] {
                assert!(!is_isomorphic(&a.reference(), &b.reference()));
            }
        }
    }

    #[test]
    fn mapping_is_a_real_isomorphism() {
        let kind = ExceptionalKind::G4;
        let r = kind.reference();
        // relabeled copy
        let perm = [3usize, 0, 5, 1, 6, 2, 4];
        let mut g = Graph::empty(7);
        for (u, v) in r.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        let (k, map) = detect_exceptional_mapped(&g).unwrap().unwrap();
        assert_eq!(k, kind);
        for (u, v) in r.edges() {
            assert!(g.has_edge(map[u], map[v]));
        }
    }
}
