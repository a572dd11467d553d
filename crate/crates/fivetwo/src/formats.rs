//! Text formats shared by the CLI and test fixtures.
//!
//! Edge list: first line `n m`, then m lines `u v` (0-based ids).
//! Point set: first line `k R`, then k lines `x y`.
//! Assignment: one line per vertex, `v: a b` with a < b.

use crate::graph::{Graph, GraphError};
use crate::labeling::{Configuration, LabelPair};
use crate::rdisk::PointSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("line {0}: {1}")]
    Graph(usize, GraphError),
}

fn parse_two<T: std::str::FromStr>(line: &str, lineno: usize) -> Result<(T, T), FormatError> {
    let mut it = line.split_whitespace();
    let a = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::Parse(lineno, format!("expected two fields: {:?}", line)))?;
    let b = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::Parse(lineno, format!("expected two fields: {:?}", line)))?;
    if it.next().is_some() {
        return Err(FormatError::Parse(
            lineno,
            format!("trailing fields: {:?}", line),
        ));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| FormatError::Parse(0, "empty input".into()))?;
    let (n, m): (usize, usize) = parse_two(header, lineno)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (lineno, line) in lines {
        let (u, v): (usize, usize) = parse_two(line, lineno)?;
        g.add_edge_checked(u, v)
            .map_err(|e| FormatError::Graph(lineno, e))?;
        count += 1;
    }
    if count != m {
        return Err(FormatError::Parse(
            0,
            format!("header declared {} edges, found {}", m, count),
        ));
    }
    Ok(g)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

pub fn parse_point_set(text: &str) -> Result<PointSet, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| FormatError::Parse(0, "empty input".into()))?;
    let mut it = header.split_whitespace();
    let k: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::Parse(lineno, "expected `k R`".into()))?;
    let r: f64 = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::Parse(lineno, "expected `k R`".into()))?;
    let mut points = Vec::with_capacity(k);
    for (lineno, line) in lines {
        let (x, y): (f64, f64) = parse_two(line, lineno)?;
        points.push((x, y));
    }
    if points.len() != k {
        return Err(FormatError::Parse(
            0,
            format!("header declared {} points, found {}", k, points.len()),
        ));
    }
    PointSet::new(points, r).map_err(|e| FormatError::Parse(lineno, e.to_string()))
}

pub fn format_point_set(ps: &PointSet) -> String {
    let mut out = format!("{} {}\n", ps.points.len(), ps.radius);
    for (x, y) in &ps.points {
        out.push_str(&format!("{:.6} {:.6}\n", x, y));
    }
    out
}

pub fn format_configuration(f: &Configuration) -> String {
    let mut out = String::new();
    for v in 0..f.n() {
        let p = f.get(v);
        out.push_str(&format!("{}: {} {}\n", v, p.lo(), p.hi()));
    }
    out
}

pub fn parse_configuration(text: &str, n: usize) -> Result<Configuration, FormatError> {
    let mut slots: Vec<Option<LabelPair>> = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (vpart, rest) = line
            .split_once(':')
            .ok_or_else(|| FormatError::Parse(lineno, format!("expected `v: a b`: {:?}", line)))?;
        let v: usize = vpart
            .trim()
            .parse()
            .map_err(|_| FormatError::Parse(lineno, format!("bad vertex id: {:?}", vpart)))?;
        if v >= n {
            return Err(FormatError::Parse(lineno, format!("vertex {} out of range", v)));
        }
        let (a, b): (u8, u8) = parse_two(rest.trim(), lineno)?;
        let p = LabelPair::new(a, b)
            .map_err(|e| FormatError::Parse(lineno, e.to_string()))?;
        slots[v] = Some(p);
    }
    let pairs: Result<Vec<LabelPair>, FormatError> = slots
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| FormatError::Parse(0, format!("vertex {} unassigned", v))))
        .collect();
    Ok(Configuration::new(pairs?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::cycle(5);
        let text = format_edge_list(&g);
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let err = parse_edge_list("3 1\n0 9\n").unwrap_err();
        assert!(matches!(err, FormatError::Graph(2, _)));
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("declared 2"));
    }

    #[test]
    fn configuration_roundtrip() {
        let f = crate::labeling::c5_pattern();
        let text = format_configuration(&f);
        let g = parse_configuration(&text, 5).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn point_set_roundtrip() {
        let ps = PointSet::new(vec![(0.0, 0.0), (1.5, 2.25)], 1.5).unwrap();
        let text = format_point_set(&ps);
        let qs = parse_point_set(&text).unwrap();
        assert_eq!(qs.points.len(), 2);
        assert_eq!(qs.radius, 1.5);
    }
}
