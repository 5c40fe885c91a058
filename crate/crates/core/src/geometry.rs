//! Planar points, the two metrics, betweenness, pair classes and the
//! componentwise orders.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(Coord::from_int(x), Coord::from_int(y))
    }

    /// Reflection through the origin.
    pub fn negated(&self) -> Point {
        Point::new(-&self.x, -&self.y)
    }

    /// Reflection across the x-axis.
    pub fn mirrored_y(&self) -> Point {
        Point::new(self.x.clone(), -&self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    L1,
    Linf,
}

impl MetricKind {
    pub fn distance(self, p: &Point, q: &Point) -> Coord {
        match self {
            MetricKind::L1 => l1_distance(p, q),
            MetricKind::Linf => linf_distance(p, q),
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricKind::L1 => "l1",
            MetricKind::Linf => "linf",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairClass {
    Increasing,
    Decreasing,
    Horizontal,
    Vertical,
}

/// A duplicate-free, indexed set of points. Indices are stable for the
/// lifetime of the set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint {
                    point: p.to_string(),
                    first,
                    second: i,
                });
            }
            seen.insert(p, i);
        }
        Ok(PointSet { points })
    }

    /// Convenience constructor for integer coordinates.
    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        PointSet::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn get(&self, i: usize) -> Result<&Point> {
        self.points.get(i).ok_or(Error::IndexOutOfRange(i))
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Applies an injective point map; indices are preserved.
    pub fn map_injective(&self, f: impl Fn(&Point) -> Point) -> PointSet {
        let points: Vec<Point> = self.points.iter().map(f).collect();
        debug_assert!(PointSet::new(points.clone()).is_ok());
        PointSet { points }
    }

    pub fn negated(&self) -> PointSet {
        self.map_injective(Point::negated)
    }

    pub fn mirrored_y(&self) -> PointSet {
        self.map_injective(Point::mirrored_y)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.points).finish()
    }
}

pub fn l1_distance(p: &Point, q: &Point) -> Coord {
    (&p.x - &q.x).abs() + (&p.y - &q.y).abs()
}

pub fn linf_distance(p: &Point, q: &Point) -> Coord {
    let dx = (&p.x - &q.x).abs();
    let dy = (&p.y - &q.y).abs();
    dx.max(dy)
}

/// `[xzy]`: the three points are pairwise distinct and
/// `d(x, y) = d(x, z) + d(z, y)`.
pub fn is_between(x: &Point, z: &Point, y: &Point, metric: MetricKind) -> bool {
    if x == z || z == y || x == y {
        return false;
    }
    metric.distance(x, y) == metric.distance(x, z) + metric.distance(z, y)
}

/// Whether `z` lies in the closed axis-parallel bounding box of `x` and `y`.
pub fn in_closed_box(x: &Point, z: &Point, y: &Point) -> bool {
    let within = |a: &Coord, c: &Coord, b: &Coord| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        lo <= c && c <= hi
    };
    within(&x.x, &z.x, &y.x) && within(&x.y, &z.y, &y.y)
}

pub fn classify_pair(p: &Point, q: &Point) -> Result<PairClass> {
    if p == q {
        return Err(Error::DegeneratePair);
    }
    if p.y == q.y {
        return Ok(PairClass::Horizontal);
    }
    if p.x == q.x {
        return Ok(PairClass::Vertical);
    }
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    Ok(if dx.is_positive() == dy.is_positive() {
        PairClass::Increasing
    } else {
        PairClass::Decreasing
    })
}

/// `c ≤_I d`: both coordinates non-decreasing.
pub fn leq_i(c: &Point, d: &Point) -> bool {
    c.x <= d.x && c.y <= d.y
}

/// `c ≤_D d`: x non-decreasing, y non-increasing.
pub fn leq_d(c: &Point, d: &Point) -> bool {
    c.x <= d.x && c.y >= d.y
}

pub fn lt_i(c: &Point, d: &Point) -> bool {
    c != d && leq_i(c, d)
}

pub fn lt_d(c: &Point, d: &Point) -> bool {
    c != d && leq_d(c, d)
}

/// The eight symmetries of the square grid. Each is an isometry of both
/// metrics, so it preserves line structure index by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    /// `(x, y) ↦ (-x, -y)`
    Negate,
    /// `(x, y) ↦ (-x, y)`
    MirrorX,
    /// `(x, y) ↦ (x, -y)`
    MirrorY,
    /// `(x, y) ↦ (-y, x)`
    RotateLeft,
    /// `(x, y) ↦ (y, -x)`
    RotateRight,
    /// `(x, y) ↦ (y, x)`
    Transpose,
    /// `(x, y) ↦ (-y, -x)`
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Negate,
        Symmetry::MirrorX,
        Symmetry::MirrorY,
        Symmetry::RotateLeft,
        Symmetry::RotateRight,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    pub fn apply(self, p: &Point) -> Point {
        let (x, y) = (&p.x, &p.y);
        match self {
            Symmetry::Identity => p.clone(),
            Symmetry::Negate => Point::new(-x, -y),
            Symmetry::MirrorX => Point::new(-x, y.clone()),
            Symmetry::MirrorY => Point::new(x.clone(), -y),
            Symmetry::RotateLeft => Point::new(-y, x.clone()),
            Symmetry::RotateRight => Point::new(y.clone(), -x),
            Symmetry::Transpose => Point::new(y.clone(), x.clone()),
            Symmetry::AntiTranspose => Point::new(-y, -x),
        }
    }

    pub fn apply_set(self, set: &PointSet) -> PointSet {
        set.map_injective(|p| self.apply(p))
    }
}

/// The componentwise order attached to increasing or decreasing pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Increasing,
    Decreasing,
}

impl Order {
    pub fn leq(self, c: &Point, d: &Point) -> bool {
        match self {
            Order::Increasing => leq_i(c, d),
            Order::Decreasing => leq_d(c, d),
        }
    }

    pub fn lt(self, c: &Point, d: &Point) -> bool {
        c != d && self.leq(c, d)
    }

    pub fn pair_class(self) -> PairClass {
        match self {
            Order::Increasing => PairClass::Increasing,
            Order::Decreasing => PairClass::Decreasing,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn q(s: &str) -> Coord {
        s.parse().unwrap()
    }

    #[test]
    fn l1_examples() {
        assert_eq!(l1_distance(&p(0, 0), &p(0, 0)), Coord::zero());
        assert_eq!(l1_distance(&p(0, 0), &p(2, 1)), Coord::from_int(3));
        // |-3 - 1| + |5/2 - 1/2| = 4 + 2
        let a = Point::new(q("-3"), q("5/2"));
        let b = Point::new(q("1"), q("1/2"));
        assert_eq!(l1_distance(&a, &b), Coord::from_int(6));
    }

    #[test]
    fn linf_examples() {
        assert_eq!(linf_distance(&p(0, 0), &p(0, 0)), Coord::zero());
        assert_eq!(linf_distance(&p(0, 0), &p(2, 1)), Coord::from_int(2));
        assert_eq!(linf_distance(&p(-1, 4), &p(2, -3)), Coord::from_int(7));
    }

    #[test]
    fn betweenness_examples() {
        assert!(is_between(&p(0, 0), &p(1, 0), &p(2, 1), MetricKind::L1));
        assert!(!is_between(&p(0, 0), &p(0, 0), &p(2, 1), MetricKind::L1));
        assert!(!is_between(&p(0, 0), &p(0, 2), &p(2, 1), MetricKind::L1));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_pair(&p(0, 0), &p(1, 2)).unwrap(),
            PairClass::Increasing
        );
        assert_eq!(
            classify_pair(&p(0, 3), &p(1, 0)).unwrap(),
            PairClass::Decreasing
        );
        assert_eq!(
            classify_pair(&p(0, 0), &p(5, 0)).unwrap(),
            PairClass::Horizontal
        );
        assert_eq!(
            classify_pair(&p(2, 0), &p(2, 5)).unwrap(),
            PairClass::Vertical
        );
        assert_eq!(
            classify_pair(&p(1, 1), &p(1, 1)),
            Err(Error::DegeneratePair)
        );
    }

    #[test]
    fn order_examples() {
        assert!(leq_i(&p(0, 0), &p(1, 1)));
        assert!(!leq_i(&p(0, 1), &p(1, 0)));
        assert!(leq_i(&p(2, 2), &p(2, 2)));
        assert!(leq_d(&p(0, 1), &p(1, 0)));
        assert!(!leq_d(&p(0, 0), &p(1, 1)));
        assert!(leq_d(&p(2, 2), &p(2, 2)));
        assert!(!lt_i(&p(2, 2), &p(2, 2)));
    }

    #[test]
    fn duplicates_rejected() {
        let err = PointSet::from_ints(&[(0, 0), (1, 1), (0, 0)]).unwrap_err();
        assert!(matches!(
            err,
            Error::DuplicatePoint {
                first: 0,
                second: 2,
                ..
            }
        ));
    }
}
