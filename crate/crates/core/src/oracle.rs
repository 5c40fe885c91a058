//! Brute-force lines over an arbitrary finite metric, and the 45° rotation
//! that carries L∞ lines to L1 lines.
//!
//! [`lines_from_matrix`] knows nothing about coordinates. It serves as the
//! independent reference for the specialized planar enumeration.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::geometry::{MetricKind, Point, PointSet};
use crate::lines::{enumerate_lines, LineCatalog};

/// A finite metric given by its distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    d: Vec<Vec<Coord>>,
}

impl DistanceMatrix {
    /// Validates symmetry, zero diagonal, positivity and the triangle
    /// inequality.
    #[allow(clippy::needless_range_loop)]
    pub fn new(d: Vec<Vec<Coord>>) -> Result<Self> {
        let n = d.len();
        if let Some(i) = d.iter().position(|row| row.len() != n) {
            return Err(Error::NotAMetric(format!(
                "row {i} has {} entries, expected {n}",
                d[i].len()
            )));
        }
        for i in 0..n {
            if !d[i][i].is_zero() {
                return Err(Error::NotAMetric(format!(
                    "d({i},{i}) = {} is not zero",
                    d[i][i]
                )));
            }
            for j in 0..n {
                if d[i][j] != d[j][i] {
                    return Err(Error::NotAMetric(format!("d({i},{j}) != d({j},{i})")));
                }
                if i != j && !d[i][j].is_positive() {
                    return Err(Error::NotAMetric(format!(
                        "d({i},{j}) = {} is not positive",
                        d[i][j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if d[i][k] > &d[i][j] + &d[j][k] {
                        return Err(Error::NotAMetric(format!(
                            "triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(DistanceMatrix { d })
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &Coord {
        &self.d[i][j]
    }

    /// Multiplies every entry by a positive factor.
    pub fn scaled(&self, factor: &Coord) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::NotAMetric(format!(
                "scale factor {factor} is not positive"
            )));
        }
        let d = self
            .d
            .iter()
            .map(|row| row.iter().map(|v| v * factor).collect())
            .collect();
        Ok(DistanceMatrix { d })
    }

    fn between(&self, x: usize, z: usize, y: usize) -> bool {
        x != z && z != y && x != y && self.d[x][y] == &self.d[x][z] + &self.d[z][y]
    }

    /// The text form read by [`parse_matrix`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.len());
        for row in &self.d {
            let cells: Vec<String> = row.iter().map(Coord::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

pub fn matrix_from_points(set: &PointSet, metric: MetricKind) -> Result<DistanceMatrix> {
    if set.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let pts = set.points();
    let d = pts
        .iter()
        .map(|p| pts.iter().map(|q| metric.distance(p, q)).collect())
        .collect();
    DistanceMatrix::new(d)
}

/// Reads `n` followed by `n × n` whitespace-separated rationals. Lines
/// starting with `#` are ignored.
pub fn parse_matrix(text: &str) -> Result<DistanceMatrix> {
    let mut tokens = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)));
    let (line, first) = tokens.next().ok_or(Error::Parse {
        line: 1,
        message: "empty matrix file".into(),
    })?;
    let n: usize = first.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected the matrix size, found `{first}`"),
    })?;
    let mut d = vec![Vec::with_capacity(n); n];
    for row in d.iter_mut() {
        for _ in 0..n {
            let (line, tok) = tokens.next().ok_or(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("expected {} entries", n * n),
            })?;
            let v = tok.parse::<Coord>().map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            row.push(v);
        }
    }
    if let Some((line, tok)) = tokens.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing entry `{tok}`"),
        });
    }
    DistanceMatrix::new(d)
}

/// Lines of an arbitrary finite metric, by checking all three betweenness
/// orders for every pair and every third point.
pub fn lines_from_matrix(d: &DistanceMatrix) -> LineCatalog {
    let n = d.len();
    LineCatalog::from_pairs(n, |u, v| {
        (0..n)
            .filter(|&z| {
                z == u || z == v || d.between(u, z, v) || d.between(z, u, v) || d.between(u, v, z)
            })
            .collect()
    })
}

/// `(x, y) ↦ (x + y, x − y)`: a 45° rotation composed with scaling by √2.
pub fn rotate_point(p: &Point) -> Point {
    Point::new(&p.x + &p.y, &p.x - &p.y)
}

pub fn rotate_45(set: &PointSet) -> PointSet {
    set.map_injective(rotate_point)
}

/// First difference between two catalogs, if any.
pub fn catalog_difference(left: &LineCatalog, right: &LineCatalog) -> Option<String> {
    if left.n != right.n {
        return Some(format!("point counts differ: {} vs {}", left.n, right.n));
    }
    for (key, gens) in &left.entries {
        match right.entries.get(key) {
            None => return Some(format!("line {key:?} only on the left")),
            Some(other) if other != gens => {
                return Some(format!("line {key:?} generated by {gens:?} vs {other:?}"))
            }
            _ => {}
        }
    }
    right
        .entries
        .keys()
        .find(|k| !left.entries.contains_key(*k))
        .map(|k| format!("line {k:?} only on the right"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinfCount {
    pub count: usize,
    pub has_universal: bool,
}

/// L∞ line count computed from the distance matrix and, independently,
/// from the L1 lines of the rotated set. The two must agree line by line.
pub fn linf_line_count(set: &PointSet) -> Result<LinfCount> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: set.len(),
        });
    }
    let direct = lines_from_matrix(&matrix_from_points(set, MetricKind::Linf)?);
    let rotated = enumerate_lines(&rotate_45(set), MetricKind::L1)?;
    if let Some(diff) = catalog_difference(&direct, &rotated) {
        return Err(Error::RotationMismatch(diff));
    }
    Ok(LinfCount {
        count: direct.len(),
        has_universal: direct.has_universal(),
    })
}

/// Specialized enumeration against the matrix oracle for one metric.
pub fn oracle_check(set: &PointSet, metric: MetricKind) -> Result<Option<String>> {
    let fast = enumerate_lines(set, metric)?;
    let slow = lines_from_matrix(&matrix_from_points(set, metric)?);
    Ok(catalog_difference(&fast, &slow))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Result<DistanceMatrix> {
        DistanceMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Coord::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn matrix_from_points_examples() {
        let x = PointSet::from_ints(&[(0, 0), (2, 1)]).unwrap();
        assert_eq!(
            matrix_from_points(&x, MetricKind::L1).unwrap().get(0, 1),
            &Coord::from_int(3)
        );
        assert_eq!(
            matrix_from_points(&x, MetricKind::Linf).unwrap().get(0, 1),
            &Coord::from_int(2)
        );
    }

    #[test]
    fn collinear_metric_has_one_universal_line() {
        let d = m(&[&[0, 1, 3], &[1, 0, 2], &[3, 2, 0]]).unwrap();
        let cat = lines_from_matrix(&d);
        assert_eq!(cat.len(), 1);
        assert!(cat.has_universal());
    }

    #[test]
    fn equilateral_metric_has_three_lines() {
        let d = m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        let cat = lines_from_matrix(&d);
        assert_eq!(cat.len(), 3);
        assert!(!cat.has_universal());
    }

    #[test]
    fn rejects_non_metrics() {
        assert!(m(&[&[0, 1], &[2, 0]]).is_err());
        assert!(m(&[&[1, 1], &[1, 0]]).is_err());
        assert!(m(&[&[0, 0], &[0, 0]]).is_err());
        assert!(m(&[&[0, 1, 5], &[1, 0, 1], &[5, 1, 0]]).is_err());
        assert!(m(&[&[0, 1], &[1]]).is_err());
    }

    #[test]
    fn rotation_basis_images() {
        assert_eq!(rotate_point(&Point::int(0, 0)), Point::int(0, 0));
        assert_eq!(rotate_point(&Point::int(1, 0)), Point::int(1, 1));
        assert_eq!(rotate_point(&Point::int(0, 1)), Point::int(1, -1));
        // Applying twice doubles.
        assert_eq!(
            rotate_point(&rotate_point(&Point::int(3, -5))),
            Point::int(6, -10)
        );
    }

    #[test]
    fn linf_examples() {
        let row = PointSet::from_ints(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert!(linf_line_count(&row).unwrap().has_universal);
        let tri = PointSet::from_ints(&[(0, 0), (1, 1), (2, 0)]).unwrap();
        let c = linf_line_count(&tri).unwrap();
        assert_eq!(c.count, 1);
        assert!(c.has_universal);
    }

    #[test]
    fn parse_matrix_text() {
        let d = parse_matrix("# comment\n3\n0 1 1/2\n1 0 1\n1/2 1 0\n").unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.get(0, 2), &Coord::ratio(1, 2).unwrap());
        assert_eq!(parse_matrix(&d.to_text()).unwrap(), d);
        assert!(matches!(
            parse_matrix("2\n0 1\n1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_matrix("2\n0 1\n1 0 7\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_matrix("2\n0 x\n1 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("2\n0 1\n2 0\n"),
            Err(Error::NotAMetric(_))
        ));
    }
}
