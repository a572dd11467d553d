//! Proximity graphs: vertices are planar points, edges join points at
//! Euclidean distance at most R.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RdiskError {
    #[error("radius must be positive, got {0}")]
    BadRadius(f64),
}

#[derive(Debug, Clone)]
pub struct PointSet {
    pub points: Vec<(f64, f64)>,
    pub radius: f64,
}

impl PointSet {
    pub fn new(points: Vec<(f64, f64)>, radius: f64) -> Result<Self, RdiskError> {
        if !(radius > 0.0) {
            return Err(RdiskError::BadRadius(radius));
        }
        Ok(PointSet { points, radius })
    }
}

/// Vertex i corresponds to point i; edge ij iff dist(p_i, p_j) <= R.
pub fn generate_rdisk(ps: &PointSet) -> Graph {
    let n = ps.points.len();
    let r2 = ps.radius * ps.radius;
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let dx = ps.points[i].0 - ps.points[j].0;
            let dy = ps.points[i].1 - ps.points[j].1;
            if dx * dx + dy * dy <= r2 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collinear_points_make_a_path() {
        let ps = PointSet::new(vec![(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)], 1.1).unwrap();
        let g = generate_rdisk(&ps);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn far_points_are_isolated() {
        let ps = PointSet::new(vec![(0.0, 0.0), (3.0, 0.0)], 1.0).unwrap();
        let g = generate_rdisk(&ps);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn rejects_nonpositive_radius() {
        assert!(PointSet::new(vec![], 0.0).is_err());
        assert!(PointSet::new(vec![], -1.0).is_err());
    }

    #[test]
    fn distance_exactly_r_is_an_edge() {
        let ps = PointSet::new(vec![(0.0, 0.0), (1.0, 0.0)], 1.0).unwrap();
        assert_eq!(generate_rdisk(&ps).m(), 1);
    }
}
