//! Label pairs, partial and total assignments, and the verifier.
//!
//! A vertex is satisfied when the union of pairs over its closed neighborhood
//! is all of {1..5}. Satisfaction is monotone in the edge set: adding edges
//! never shrinks a closed neighborhood, so an assignment valid on a spanning
//! subgraph is valid on the whole graph.

use crate::graph::Graph;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

pub const FULL_MASK: u8 = 0b11111;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("label {0} outside 1..=5")]
    BadLabel(u8),
    #[error("labels equal: {0}")]
    EqualLabels(u8),
    #[error("vertex {0} unassigned")]
    Unassigned(usize),
    #[error("permutation is not a bijection on 1..=5")]
    BadPermutation,
    #[error("vertex {0} has a label set of size {1}, expected {2}")]
    WrongSetSize(usize, usize, usize),
}

/// Unordered pair of distinct labels from {1..5}, stored with the smaller first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelPair {
    a: u8,
    b: u8,
}

/// The ten possible pairs in lexicographic order.
pub const ALL_PAIRS: [LabelPair; 10] = [
    LabelPair { a: 1, b: 2 },
    LabelPair { a: 1, b: 3 },
    LabelPair { a: 1, b: 4 },
    LabelPair { a: 1, b: 5 },
    LabelPair { a: 2, b: 3 },
    LabelPair { a: 2, b: 4 },
    LabelPair { a: 2, b: 5 },
    LabelPair { a: 3, b: 4 },
    LabelPair { a: 3, b: 5 },
    LabelPair { a: 4, b: 5 },
];

impl LabelPair {
    pub fn new(x: u8, y: u8) -> Result<Self, LabelingError> {
        if !(1..=5).contains(&x) {
            return Err(LabelingError::BadLabel(x));
        }
        if !(1..=5).contains(&y) {
            return Err(LabelingError::BadLabel(y));
        }
        if x == y {
            return Err(LabelingError::EqualLabels(x));
        }
        Ok(if x < y {
            LabelPair { a: x, b: y }
        } else {
            LabelPair { a: y, b: x }
        })
    }

    /// Panicking constructor for literals.
    pub fn of(x: u8, y: u8) -> Self {
        Self::new(x, y).expect("bad label pair")
    }

    pub fn lo(&self) -> u8 {
        self.a
    }

    pub fn hi(&self) -> u8 {
        self.b
    }

    pub fn contains(&self, l: u8) -> bool {
        self.a == l || self.b == l
    }

    pub fn mask(&self) -> u8 {
        (1 << (self.a - 1)) | (1 << (self.b - 1))
    }

    pub fn from_mask(mask: u8) -> Option<Self> {
        if mask.count_ones() != 2 || mask & !FULL_MASK != 0 {
            return None;
        }
        let a = mask.trailing_zeros() as u8 + 1;
        let b = 7 - (mask.leading_zeros() as u8 - 1);
        Some(LabelPair { a, b })
    }

    pub fn intersects(&self, other: &LabelPair) -> bool {
        self.mask() & other.mask() != 0
    }

    pub fn disjoint(&self, other: &LabelPair) -> bool {
        !self.intersects(other)
    }

    /// Index into ALL_PAIRS.
    pub fn index(&self) -> usize {
        ALL_PAIRS.iter().position(|p| p == self).unwrap()
    }

    pub fn map(&self, sigma: &Permutation) -> LabelPair {
        LabelPair::of(sigma.apply(self.a), sigma.apply(self.b))
    }
}

impl fmt::Debug for LabelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

impl fmt::Display for LabelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.b)
    }
}

pub fn mask_to_labels(mask: u8) -> Vec<u8> {
    (1..=5).filter(|&l| mask & (1 << (l - 1)) != 0).collect()
}

pub fn labels_to_mask(labels: &[u8]) -> u8 {
    labels.iter().fold(0, |m, &l| m | (1 << (l - 1)))
}

/// Permutation of {1..5}. `images[i]` is the image of label i+1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: [u8; 5],
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            images: [1, 2, 3, 4, 5],
        }
    }

    pub fn new(images: [u8; 5]) -> Result<Self, LabelingError> {
        let mut seen = [false; 5];
        for &x in &images {
            if !(1..=5).contains(&x) {
                return Err(LabelingError::BadLabel(x));
            }
            if seen[(x - 1) as usize] {
                return Err(LabelingError::BadPermutation);
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn apply(&self, l: u8) -> u8 {
        self.images[(l - 1) as usize]
    }

    pub fn apply_mask(&self, mask: u8) -> u8 {
        let mut out = 0u8;
        for l in 1..=5u8 {
            if mask & (1 << (l - 1)) != 0 {
                out |= 1 << (self.apply(l) - 1);
            }
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; 5];
        for l in 1..=5u8 {
            images[(self.apply(l) - 1) as usize] = l;
        }
        Permutation { images }
    }

    /// All 120 permutations in lexicographic order of their image arrays.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(120);
        let mut items: Vec<u8> = vec![1, 2, 3, 4, 5];
        permute_rec(&mut items, 0, &mut out);
        out.sort_by_key(|p| p.images);
        out
    }
}

fn permute_rec(items: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k == items.len() {
        out.push(Permutation {
            images: [items[0], items[1], items[2], items[3], items[4]],
        });
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Assignment defined on a subset of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialConfiguration {
    slots: Vec<Option<LabelPair>>,
}

impl PartialConfiguration {
    pub fn empty(n: usize) -> Self {
        PartialConfiguration {
            slots: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn get(&self, v: usize) -> Option<LabelPair> {
        self.slots[v]
    }

    pub fn set(&mut self, v: usize, p: LabelPair) {
        self.slots[v] = Some(p);
    }

    pub fn clear(&mut self, v: usize) {
        self.slots[v] = None;
    }

    pub fn is_assigned(&self, v: usize) -> bool {
        self.slots[v].is_some()
    }

    pub fn assigned_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    /// Union mask over the closed neighborhood, counting only assigned vertices.
    pub fn closed_mask(&self, g: &Graph, v: usize) -> u8 {
        let mut m = self.slots[v].map_or(0, |p| p.mask());
        for w in g.neighbors(v) {
            if let Some(p) = self.slots[w] {
                m |= p.mask();
            }
        }
        m
    }

    /// Union mask over the open neighborhood.
    pub fn open_mask(&self, g: &Graph, v: usize) -> u8 {
        let mut m = 0;
        for w in g.neighbors(v) {
            if let Some(p) = self.slots[w] {
                m |= p.mask();
            }
        }
        m
    }

    /// Labels of {1..5} not present on N[v] under the partial assignment.
    pub fn missing_colors(&self, g: &Graph, v: usize) -> Vec<u8> {
        mask_to_labels(FULL_MASK & !self.closed_mask(g, v))
    }

    pub fn missing_mask(&self, g: &Graph, v: usize) -> u8 {
        FULL_MASK & !self.closed_mask(g, v)
    }

    /// Satisfaction under the partial assignment; errors if N[v] is not
    /// fully assigned.
    pub fn is_satisfied(&self, g: &Graph, v: usize) -> Result<bool, LabelingError> {
        if !self.is_assigned(v) {
            return Err(LabelingError::Unassigned(v));
        }
        for w in g.neighbors(v) {
            if !self.is_assigned(w) {
                return Err(LabelingError::Unassigned(w));
            }
        }
        Ok(self.closed_mask(g, v) == FULL_MASK)
    }

    /// Satisfied already, counting only assigned vertices.
    pub fn satisfied_so_far(&self, g: &Graph, v: usize) -> bool {
        self.closed_mask(g, v) == FULL_MASK
    }

    pub fn into_total(self) -> Result<Configuration, LabelingError> {
        let mut pairs = Vec::with_capacity(self.slots.len());
        for (v, s) in self.slots.iter().enumerate() {
            pairs.push(s.ok_or(LabelingError::Unassigned(v))?);
        }
        Ok(Configuration { pairs })
    }
}

/// Total assignment of label pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pairs: Vec<LabelPair>,
}

impl Configuration {
    pub fn new(pairs: Vec<LabelPair>) -> Self {
        Configuration { pairs }
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn get(&self, v: usize) -> LabelPair {
        self.pairs[v]
    }

    pub fn pairs(&self) -> &[LabelPair] {
        &self.pairs
    }

    pub fn as_partial(&self) -> PartialConfiguration {
        PartialConfiguration {
            slots: self.pairs.iter().copied().map(Some).collect(),
        }
    }

    pub fn closed_mask(&self, g: &Graph, v: usize) -> u8 {
        let mut m = self.pairs[v].mask();
        for w in g.neighbors(v) {
            m |= self.pairs[w].mask();
        }
        m
    }

    pub fn is_satisfied(&self, g: &Graph, v: usize) -> bool {
        self.closed_mask(g, v) == FULL_MASK
    }

    /// Pointwise image under a label permutation.
    pub fn permute_labels(&self, sigma: &Permutation) -> Configuration {
        Configuration {
            pairs: self.pairs.iter().map(|p| p.map(sigma)).collect(),
        }
    }

    /// Minimum over all 120 label permutations of the pair-index encoding.
    /// Two configurations are equal up to relabeling iff the keys match.
    pub fn canonical_key(&self) -> Vec<u8> {
        Permutation::all()
            .iter()
            .map(|sigma| {
                self.pairs
                    .iter()
                    .map(|p| p.map(sigma).index() as u8)
                    .collect::<Vec<u8>>()
            })
            .min()
            .unwrap()
    }
}

/// Exact list of unsatisfied vertices; empty certifies the configuration.
pub fn verify(g: &Graph, f: &Configuration) -> Vec<usize> {
    assert_eq!(g.n(), f.n(), "configuration size mismatch");
    (0..g.n()).filter(|&v| !f.is_satisfied(g, v)).collect()
}

/// Labels usable by r-configurations: either a (label, copy) pair derived from
/// a 2-of-5 configuration or one of the two domination classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RLabel {
    Pair(u8, u8),
    Dom(u8),
}

impl fmt::Display for RLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RLabel::Pair(i, j) => write!(f, "p{}.{}", i, j),
            RLabel::Dom(c) => write!(f, "d{}", c),
        }
    }
}

/// Assignment of r-element label sets drawn from a finite universe.
#[derive(Debug, Clone)]
pub struct RConfiguration {
    pub r: usize,
    pub universe: BTreeSet<RLabel>,
    pub assignment: Vec<BTreeSet<RLabel>>,
}

impl RConfiguration {
    pub fn label_count(&self) -> usize {
        self.universe.len()
    }
}

/// True iff every universe label appears in every closed neighborhood and
/// every vertex holds exactly r labels from the universe.
pub fn verify_r_configuration(g: &Graph, f: &RConfiguration) -> Result<bool, LabelingError> {
    assert_eq!(g.n(), f.assignment.len());
    for (v, s) in f.assignment.iter().enumerate() {
        if s.len() != f.r {
            return Err(LabelingError::WrongSetSize(v, s.len(), f.r));
        }
    }
    for v in 0..g.n() {
        let mut seen: BTreeSet<RLabel> = f.assignment[v].clone();
        for w in g.neighbors(v) {
            seen.extend(f.assignment[w].iter().copied());
        }
        if !f.universe.iter().all(|l| seen.contains(l)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The 5-cycle assignment sending vertex i (0-based) to {i+1, ((i+3) mod 5)+1}.
pub fn c5_pattern() -> Configuration {
    Configuration::new(
        (0..5u8)
            .map(|i| LabelPair::of(i + 1, ((i + 3) % 5) + 1))
            .collect(),
    )
}

/// Fixed valid assignment on the 6-cycle with all six pairs distinct and
/// nonadjacent pairs intersecting.
pub fn c6_pattern() -> Configuration {
    Configuration::new(vec![
        LabelPair::of(1, 3),
        LabelPair::of(2, 4),
        LabelPair::of(1, 5),
        LabelPair::of(2, 3),
        LabelPair::of(1, 4),
        LabelPair::of(2, 5),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_basics() {
        let p = LabelPair::of(4, 2);
        assert_eq!((p.lo(), p.hi()), (2, 4));
        assert!(p.contains(2) && p.contains(4) && !p.contains(3));
        assert_eq!(LabelPair::from_mask(p.mask()), Some(p));
        assert!(LabelPair::new(0, 3).is_err());
        assert!(LabelPair::new(3, 3).is_err());
        for (i, p) in ALL_PAIRS.iter().enumerate() {
            assert_eq!(p.index(), i);
        }
    }

    #[test]
    fn c5_pattern_verifies() {
        let g = Graph::cycle(5);
        let f = c5_pattern();
        assert_eq!(f.get(0), LabelPair::of(1, 4));
        assert_eq!(f.get(1), LabelPair::of(2, 5));
        assert_eq!(f.get(2), LabelPair::of(3, 1));
        assert_eq!(f.get(3), LabelPair::of(4, 2));
        assert_eq!(f.get(4), LabelPair::of(5, 3));
        assert!(verify(&g, &f).is_empty());
    }

    #[test]
    fn c6_pattern_verifies_with_claimed_properties() {
        let g = Graph::cycle(6);
        let f = c6_pattern();
        assert!(verify(&g, &f).is_empty());
        for u in 0..6 {
            for v in u + 1..6 {
                assert_ne!(f.get(u), f.get(v));
                if !g.has_edge(u, v) {
                    assert!(f.get(u).intersects(&f.get(v)));
                }
            }
        }
    }

    #[test]
    fn c4_uniform_pairs_unsatisfied() {
        let g = Graph::cycle(4);
        let f = Configuration::new(vec![LabelPair::of(1, 2); 4]);
        assert_eq!(verify(&g, &f), vec![0, 1, 2, 3]);
        let fp = f.as_partial();
        for v in 0..4 {
            assert_eq!(fp.missing_colors(&g, v), vec![3, 4, 5]);
        }
    }

    #[test]
    fn k24_fixed_assignment() {
        let g = Graph::complete_bipartite(2, 4);
        let f = Configuration::new(vec![
            LabelPair::of(1, 2),
            LabelPair::of(3, 4),
            LabelPair::of(3, 5),
            LabelPair::of(4, 5),
            LabelPair::of(1, 5),
            LabelPair::of(2, 5),
        ]);
        assert!(verify(&g, &f).is_empty());
    }

    #[test]
    fn c3_direct_union() {
        let g = Graph::cycle(3);
        let f = Configuration::new(vec![
            LabelPair::of(1, 2),
            LabelPair::of(3, 4),
            LabelPair::of(5, 1),
        ]);
        assert!(verify(&g, &f).is_empty());
    }

    #[test]
    fn missing_colors_cases() {
        let g = Graph::new(1, &[]).unwrap();
        let mut f = PartialConfiguration::empty(1);
        f.set(0, LabelPair::of(2, 5));
        assert_eq!(f.missing_colors(&g, 0), vec![1, 3, 4]);

        let p2 = Graph::path(2);
        let mut f = PartialConfiguration::empty(2);
        f.set(0, LabelPair::of(1, 2));
        assert_eq!(f.missing_colors(&p2, 0), vec![3, 4, 5]);
    }

    #[test]
    fn permutation_roundtrip_and_invariance() {
        let sigma = Permutation::new([2, 1, 3, 4, 5]).unwrap();
        let g = Graph::cycle(5);
        let f = c5_pattern();
        let h = f.permute_labels(&sigma);
        assert!(verify(&g, &h).is_empty());
        assert_eq!(h.permute_labels(&sigma.inverse()), f);
        assert_eq!(Permutation::all().len(), 120);
        // identity permutation leaves f unchanged
        assert_eq!(f.permute_labels(&Permutation::identity()), f);
        // canonical keys agree up to permutation
        assert_eq!(f.canonical_key(), h.canonical_key());
    }

    #[test]
    fn missing_plus_seen_is_five() {
        let g = Graph::cycle(6);
        let f = c6_pattern().as_partial();
        for v in 0..6 {
            let seen = f.closed_mask(&g, v).count_ones() as usize;
            let missing = f.missing_colors(&g, v).len();
            assert_eq!(seen + missing, 5);
        }
    }
}
