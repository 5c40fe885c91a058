//! The point-set text format and report provenance hashes.
//!
//! One point per line as `<x> <y>`, each coordinate a decimal integer or a
//! fraction `p/q`. Lines starting with `#` are comments and blank lines are
//! ignored. The canonical form writes reduced fractions separated by a
//! single space, one point per line.

use std::collections::HashMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    let mut seen: HashMap<Point, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [xs, ys] = fields.as_slice() else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two coordinates, found {}", fields.len()),
            });
        };
        let coord = |s: &str| {
            s.parse::<Coord>().map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })
        };
        let p = Point::new(coord(xs)?, coord(ys)?);
        if let Some(&first) = seen.get(&p) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate point {p}, first given on line {first}"),
            });
        }
        seen.insert(p.clone(), line_no);
        points.push(p);
    }
    PointSet::new(points)
}

pub fn serialize_point_set(set: &PointSet) -> String {
    let mut out = String::new();
    for p in set.points() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Hex SHA-256 of a string.
pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Hash of the canonical serialization, carried in every report.
pub fn input_hash(set: &PointSet) -> String {
    sha256_hex(&serialize_point_set(set))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_fractions() {
        let set = parse_point_set("# header\n\n0 0\n  3/6  -4/2 \n# trailing\n").unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(serialize_point_set(&set), "0 0\n1/2 -2\n");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_point_set("0 0\n1 1/0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_point_set("0 0\n\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn duplicate_cites_both_lines() {
        let err = parse_point_set("0 0\n1 1\n0/5 0\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3") && msg.contains("line 1"), "{msg}");
    }

    #[test]
    fn hash_is_of_canonical_text() {
        let a = parse_point_set("2/2 0\n").unwrap();
        let b = parse_point_set("# x\n1   0\n").unwrap();
        assert_eq!(input_hash(&a), input_hash(&b));
    }
}
