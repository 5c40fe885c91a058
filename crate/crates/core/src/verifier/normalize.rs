use crate::anomaly::{Anomaly, AnomalyKind};
use crate::geometry::{PointSet, Symmetry};
use crate::region::{Interval, Quadrant, Region};

use super::isolated::{is_special, quadrant_census};

/// Vertices whose first, second and fourth quadrants are all empty.
pub fn special_vertices(set: &PointSet) -> Vec<usize> {
    (0..set.len())
        .filter(|&a| is_special(&quadrant_census(set, a)))
        .collect()
}

/// Reflects the set through the origin when it has a vertex with empty
/// first, second and fourth quadrants, so that no such vertex remains.
///
/// Returns the (possibly) reflected set and whether reflection happened.
/// Configurations that force a universal line are reported as anomalies.
pub fn reflection_normalize(set: &PointSet) -> Result<(PointSet, bool), Anomaly> {
    let specials = special_vertices(set);
    match specials.as_slice() {
        [] => Ok((set.clone(), false)),
        [a] => {
            let pa = set.point(*a);
            let up = Region::vertical(&pa.x, Interval::above(&pa.y));
            let right = Region::horizontal(Interval::above(&pa.x), &pa.y);
            if !up.is_empty_in(set, &[]) || !right.is_empty_in(set, &[]) {
                return Err(Anomaly::new(
                    AnomalyKind::UniversalStructure,
                    vec![*a],
                    "points on the half-lines above or right of the special vertex",
                ));
            }
            let reflected = set.negated();
            let left = special_vertices(&reflected);
            if !left.is_empty() {
                return Err(Anomaly::new(
                    AnomalyKind::UniversalStructure,
                    left,
                    "reflection left a vertex with empty first, second and fourth quadrants",
                ));
            }
            Ok((reflected, true))
        }
        many => Err(Anomaly::new(
            AnomalyKind::UniversalStructure,
            many.to_vec(),
            "several vertices with empty first, second and fourth quadrants",
        )),
    }
}

/// Vertices with empty first and fourth quadrants and an empty second or
/// third quadrant. Without a universal line these are the points that
/// dominate all others in the increasing order (upper right corner) or in
/// the decreasing order (lower right corner). No witness lemma covers them
/// when isolated.
pub fn right_corners(set: &PointSet) -> Vec<usize> {
    (0..set.len())
        .filter(|&a| {
            let q = quadrant_census(set, a);
            q.contains(&Quadrant::First)
                && q.contains(&Quadrant::Fourth)
                && (q.contains(&Quadrant::Second) || q.contains(&Quadrant::Third))
        })
        .collect()
}

/// Order in which symmetries are tried; the point reflection comes first.
const CANDIDATES: [Symmetry; 8] = [
    Symmetry::Identity,
    Symmetry::Negate,
    Symmetry::MirrorX,
    Symmetry::RotateLeft,
    Symmetry::RotateRight,
    Symmetry::Transpose,
    Symmetry::AntiTranspose,
    Symmetry::MirrorY,
];

/// Moves the set by a grid symmetry so that it has no right corners.
///
/// This extends [`reflection_normalize`]: the point reflection clears an
/// upper right corner, but a lower right corner, or a corner created by the
/// reflection itself, needs another symmetry. Without a universal line the
/// corners that exist are adjacent on the bounding box, so some symmetry
/// moves all of them to the left side.
pub fn normalize(set: &PointSet) -> Result<(PointSet, Symmetry), Anomaly> {
    let specials = special_vertices(set);
    if specials.len() > 1 {
        return Err(Anomaly::new(
            AnomalyKind::UniversalStructure,
            specials,
            "several vertices with empty first, second and fourth quadrants",
        ));
    }
    for sym in CANDIDATES {
        let moved = sym.apply_set(set);
        if right_corners(&moved).is_empty() {
            return Ok((moved, sym));
        }
    }
    Err(Anomaly::new(
        AnomalyKind::UniversalStructure,
        right_corners(set),
        "no grid symmetry clears the right corners",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_right_corner_is_rotated_away() {
        // (3, 0) dominates in the decreasing order and (0, 0) in the
        // increasing one from below; both sit on the bottom side.
        let x = PointSet::from_ints(&[(0, 0), (1, 2), (2, 1), (3, 0)]).unwrap();
        assert_eq!(right_corners(&x), vec![3]);
        let (moved, sym) = normalize(&x).unwrap();
        assert!(right_corners(&moved).is_empty());
        assert_ne!(sym, Symmetry::Identity);
        assert_ne!(sym, Symmetry::Negate);
    }

    #[test]
    fn identity_when_no_corner() {
        // (1, 1) has points in both left quadrants.
        let x = PointSet::from_ints(&[(0, 0), (0, 2), (1, 1)]).unwrap();
        assert_eq!(normalize(&x).unwrap().1, Symmetry::Identity);
        // (2, 0) is a lower right corner here.
        let t = PointSet::from_ints(&[(0, 0), (1, 1), (2, 0)]).unwrap();
        assert_eq!(right_corners(&t), vec![2]);
    }

    #[test]
    fn reflects_when_special_vertex_exists() {
        let x = PointSet::from_ints(&[(0, 0), (-2, -1), (-1, -2)]).unwrap();
        let (y, applied) = reflection_normalize(&x).unwrap();
        assert!(applied);
        assert_eq!(y, PointSet::from_ints(&[(0, 0), (2, 1), (1, 2)]).unwrap());
        assert!(special_vertices(&y).is_empty());
    }

    #[test]
    fn leaves_triangle_alone() {
        let x = PointSet::from_ints(&[(0, 0), (1, 1), (2, 0)]).unwrap();
        let (y, applied) = reflection_normalize(&x).unwrap();
        assert!(!applied);
        assert_eq!(y, x);
    }

    #[test]
    fn negation_is_an_involution() {
        let x = PointSet::from_ints(&[(3, -1), (0, 7), (-2, -2)]).unwrap();
        assert_eq!(x.negated().negated(), x);
    }

    #[test]
    fn two_special_vertices_are_flagged() {
        // Both (0, 0) and (0, -1) have empty first, second and fourth
        // quadrants; the vertical pair spans everything.
        let x = PointSet::from_ints(&[(0, 0), (0, -1), (-1, -2)]).unwrap();
        let err = reflection_normalize(&x).unwrap_err();
        assert_eq!(err.kind, AnomalyKind::UniversalStructure);
    }
}
