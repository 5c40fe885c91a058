//! Axis-parallel regions with explicit openness per side.
//!
//! Every region used in the emptiness arguments (rectangles, strips,
//! half-strips, quadrants, segments and half-lines) is a product of two
//! intervals, so membership reduces to four exact comparisons.

use std::fmt;

use serde::Serialize;

use crate::coord::Coord;
use crate::geometry::{Point, PointSet};

#[derive(Clone, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Open(Coord),
    Closed(Coord),
}

/// An interval of the real line given by its two bounds.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn all() -> Self {
        Interval {
            lo: Bound::Unbounded,
            hi: Bound::Unbounded,
        }
    }

    pub fn open(lo: &Coord, hi: &Coord) -> Self {
        Interval {
            lo: Bound::Open(lo.clone()),
            hi: Bound::Open(hi.clone()),
        }
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: &Coord, hi: &Coord) -> Self {
        Interval {
            lo: Bound::Open(lo.clone()),
            hi: Bound::Closed(hi.clone()),
        }
    }

    /// `[lo, hi)`
    pub fn closed_open(lo: &Coord, hi: &Coord) -> Self {
        Interval {
            lo: Bound::Closed(lo.clone()),
            hi: Bound::Open(hi.clone()),
        }
    }

    pub fn closed(lo: &Coord, hi: &Coord) -> Self {
        Interval {
            lo: Bound::Closed(lo.clone()),
            hi: Bound::Closed(hi.clone()),
        }
    }

    pub fn point(v: &Coord) -> Self {
        Interval::closed(v, v)
    }

    /// `(v, ∞)`
    pub fn above(v: &Coord) -> Self {
        Interval {
            lo: Bound::Open(v.clone()),
            hi: Bound::Unbounded,
        }
    }

    /// `(-∞, v)`
    pub fn below(v: &Coord) -> Self {
        Interval {
            lo: Bound::Unbounded,
            hi: Bound::Open(v.clone()),
        }
    }

    pub fn contains(&self, v: &Coord) -> bool {
        let lo_ok = match &self.lo {
            Bound::Unbounded => true,
            Bound::Open(l) => l < v,
            Bound::Closed(l) => l <= v,
        };
        let hi_ok = match &self.hi {
            Bound::Unbounded => true,
            Bound::Open(h) => v < h,
            Bound::Closed(h) => v <= h,
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Bound::Unbounded => write!(f, "(-inf")?,
            Bound::Open(c) => write!(f, "({c}")?,
            Bound::Closed(c) => write!(f, "[{c}")?,
        }
        match &self.hi {
            Bound::Unbounded => write!(f, ", inf)"),
            Bound::Open(c) => write!(f, ", {c})"),
            Bound::Closed(c) => write!(f, ", {c}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    Rectangle,
    Strip,
    HalfStrip,
    Quadrant,
    SegmentOpen,
    SegmentHalfOpen,
    HalfLine,
}

/// Quadrant number around a point, anticlockwise from the upper right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quadrant {
    First = 1,
    Second = 2,
    Third = 3,
    Fourth = 4,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant::First,
        Quadrant::Second,
        Quadrant::Third,
        Quadrant::Fourth,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    /// The quadrant it becomes under reflection across a horizontal axis.
    pub fn mirrored_y(self) -> Quadrant {
        match self {
            Quadrant::First => Quadrant::Fourth,
            Quadrant::Second => Quadrant::Third,
            Quadrant::Third => Quadrant::Second,
            Quadrant::Fourth => Quadrant::First,
        }
    }
}

impl Serialize for Quadrant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
    Left,
    Right,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub x: Interval,
    pub y: Interval,
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {} x {}", self.kind, self.x, self.y)
    }
}

fn ordered<'a>(a: &'a Coord, b: &'a Coord) -> (&'a Coord, &'a Coord) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Region {
    pub fn new(kind: RegionKind, x: Interval, y: Interval) -> Self {
        Region { kind, x, y }
    }

    /// Open rectangle spanned by two opposite corners.
    pub fn rectangle(c1: &Point, c2: &Point) -> Self {
        let (x0, x1) = ordered(&c1.x, &c2.x);
        let (y0, y1) = ordered(&c1.y, &c2.y);
        Region::new(
            RegionKind::Rectangle,
            Interval::open(x0, x1),
            Interval::open(y0, y1),
        )
    }

    /// Strip between the two points of a horizontal pair (unbounded in y),
    /// or of a vertical pair (unbounded in x).
    pub fn strip(p: &Point, q: &Point) -> Self {
        if p.y == q.y {
            let (x0, x1) = ordered(&p.x, &q.x);
            Region::new(RegionKind::Strip, Interval::open(x0, x1), Interval::all())
        } else {
            let (y0, y1) = ordered(&p.y, &q.y);
            Region::new(RegionKind::Strip, Interval::all(), Interval::open(y0, y1))
        }
    }

    /// Half-strip with corners `p` and `q`. Upper and lower need a
    /// horizontal pair, left and right a vertical one.
    pub fn half_strip(p: &Point, q: &Point, side: Side) -> Self {
        let (x, y) = match side {
            Side::Upper | Side::Lower => {
                debug_assert!(p.y == q.y);
                let (x0, x1) = ordered(&p.x, &q.x);
                let y = if side == Side::Upper {
                    Interval::above(&p.y)
                } else {
                    Interval::below(&p.y)
                };
                (Interval::open(x0, x1), y)
            }
            Side::Left | Side::Right => {
                debug_assert!(p.x == q.x);
                let (y0, y1) = ordered(&p.y, &q.y);
                let x = if side == Side::Right {
                    Interval::above(&p.x)
                } else {
                    Interval::below(&p.x)
                };
                (x, Interval::open(y0, y1))
            }
        };
        Region::new(RegionKind::HalfStrip, x, y)
    }

    /// Open quadrant of `a`.
    pub fn quadrant(a: &Point, q: Quadrant) -> Self {
        let (x, y) = match q {
            Quadrant::First => (Interval::above(&a.x), Interval::above(&a.y)),
            Quadrant::Second => (Interval::below(&a.x), Interval::above(&a.y)),
            Quadrant::Third => (Interval::below(&a.x), Interval::below(&a.y)),
            Quadrant::Fourth => (Interval::above(&a.x), Interval::below(&a.y)),
        };
        Region::new(RegionKind::Quadrant, x, y)
    }

    /// Horizontal segment `xs × {y}`.
    pub fn horizontal(xs: Interval, y: &Coord) -> Self {
        let kind = segment_kind(&xs);
        Region::new(kind, xs, Interval::point(y))
    }

    /// Vertical segment `{x} × ys`.
    pub fn vertical(x: &Coord, ys: Interval) -> Self {
        let kind = segment_kind(&ys);
        Region::new(kind, Interval::point(x), ys)
    }

    /// Open segment between two points sharing a coordinate.
    pub fn open_segment(p: &Point, q: &Point) -> Self {
        if p.y == q.y {
            let (x0, x1) = ordered(&p.x, &q.x);
            Region::horizontal(Interval::open(x0, x1), &p.y)
        } else {
            debug_assert!(p.x == q.x);
            let (y0, y1) = ordered(&p.y, &q.y);
            Region::vertical(&p.x, Interval::open(y0, y1))
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.x.contains(&p.x) && self.y.contains(&p.y)
    }

    /// Whether no point of `set` outside `exclude` lies in the region.
    pub fn is_empty_in(&self, set: &PointSet, exclude: &[usize]) -> bool {
        self.members(set).all(|i| exclude.contains(&i))
    }

    /// Indices of the points of `set` inside the region.
    pub fn members<'a>(&'a self, set: &'a PointSet) -> impl Iterator<Item = usize> + 'a {
        set.points()
            .iter()
            .enumerate()
            .filter(|(_, p)| self.contains(p))
            .map(|(i, _)| i)
    }
}

fn segment_kind(iv: &Interval) -> RegionKind {
    match (&iv.lo, &iv.hi) {
        (Bound::Unbounded, _) | (_, Bound::Unbounded) => RegionKind::HalfLine,
        (Bound::Open(_), Bound::Open(_)) => RegionKind::SegmentOpen,
        _ => RegionKind::SegmentHalfOpen,
    }
}

/// Emptiness of `region` within `set`, ignoring the indices in `exclude`.
pub fn region_empty(region: &Region, set: &PointSet, exclude: &[usize]) -> bool {
    region.is_empty_in(set, exclude)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    #[test]
    fn quadrant_membership() {
        let q1 = Region::quadrant(&p(0, 0), Quadrant::First);
        assert!(q1.contains(&p(1, 1)));
        assert!(!q1.contains(&p(0, 1)));
        assert_eq!(q1.kind, RegionKind::Quadrant);
    }

    #[test]
    fn upper_half_strip_membership() {
        let r = Region::half_strip(&p(0, 0), &p(2, 0), Side::Upper);
        assert!(r.contains(&p(1, 5)));
        assert!(!r.contains(&p(0, 5)));
        assert!(!r.contains(&p(1, 0)));
    }

    #[test]
    fn emptiness_examples() {
        let x = PointSet::from_ints(&[(0, 0), (3, 3)]).unwrap();
        let rect = Region::rectangle(&p(0, 0), &p(3, 3));
        assert!(region_empty(&rect, &x, &[]));

        let x = PointSet::from_ints(&[(0, 0), (1, 1), (3, 3)]).unwrap();
        assert!(!region_empty(&rect, &x, &[]));
        assert!(region_empty(&rect, &x, &[1]));

        let x = PointSet::from_ints(&[(0, 0), (0, 2)]).unwrap();
        let left = Region::half_strip(&p(0, 0), &p(0, 2), Side::Left);
        assert!(region_empty(&left, &x, &[]));
    }

    #[test]
    fn half_open_segments() {
        let one = Coord::from_int(1);
        let three = Coord::from_int(3);
        let seg = Region::horizontal(Interval::open_closed(&one, &three), &Coord::zero());
        assert_eq!(seg.kind, RegionKind::SegmentHalfOpen);
        assert!(!seg.contains(&p(1, 0)));
        assert!(seg.contains(&p(3, 0)));
        assert!(!seg.contains(&p(2, 1)));
        let ray = Region::horizontal(Interval::above(&one), &Coord::zero());
        assert_eq!(ray.kind, RegionKind::HalfLine);
        assert!(ray.contains(&p(100, 0)));
    }
}
