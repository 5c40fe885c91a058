use std::fmt;

use serde::Serialize;

/// Which checked conclusion failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    /// A line class whose pairs are not totally ordered by the pair order,
    /// or whose least pair is not strictly ordered.
    ClassOrder,
    /// An isolated vertex with both its second and third quadrant occupied.
    QuadrantLemma,
    /// No `d1`/`d2` witness where one must exist.
    AssumptionViolation,
    /// The red arrow for `⟨a, d⟩` fits none of the four placements.
    Placement,
    /// Placement pair or segment emptiness for `d1 ≠ d2` failed.
    Locations,
    /// Two same-colored arrows into `s` were not found.
    Witness,
    /// An isolated vertex none of the witness lemmas covers.
    Uncovered,
    /// `f` maps an isolated vertex into the isolated set, or two vertices
    /// to the same `(s, color)`.
    Injectivity,
    /// A blue and a red arrow induce the same line without being the two
    /// diagonals of one rectangle.
    Rectangle,
    /// Coinciding rectangles that do not cross in their middle parts.
    Nesting,
    /// A degree inequality of the counting argument failed.
    Counting,
    /// A tail of a coinciding pair has no second outgoing arrow.
    CountingLemma,
    /// Reflection normalization met a configuration that forces a
    /// universal line.
    UniversalStructure,
    /// The line count fell below `⌈n/2⌉` without a universal line.
    Bound,
    /// The specialized enumeration disagrees with the matrix oracle, or the
    /// L∞ lines disagree with the L1 lines of the rotated set.
    OracleMismatch,
    /// Pairwise distinct x and y coordinates but fewer than `n` lines.
    DistinctCoords,
}

impl AnomalyKind {
    pub fn name(self) -> &'static str {
        match self {
            AnomalyKind::ClassOrder => "class_order",
            AnomalyKind::QuadrantLemma => "quadrant_lemma",
            AnomalyKind::AssumptionViolation => "assumption_violation",
            AnomalyKind::Placement => "placement",
            AnomalyKind::Locations => "locations",
            AnomalyKind::Witness => "witness",
            AnomalyKind::Uncovered => "uncovered",
            AnomalyKind::Injectivity => "injectivity",
            AnomalyKind::Rectangle => "rectangle",
            AnomalyKind::Nesting => "nesting",
            AnomalyKind::Counting => "counting",
            AnomalyKind::CountingLemma => "counting_lemma",
            AnomalyKind::UniversalStructure => "universal_structure",
            AnomalyKind::Bound => "bound",
            AnomalyKind::OracleMismatch => "oracle_mismatch",
            AnomalyKind::DistinctCoords => "distinct_coords",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Anomaly {
    pub kind: AnomalyKind,
    pub vertices: Vec<usize>,
    pub detail: String,
}

impl Anomaly {
    pub fn new(kind: AnomalyKind, vertices: Vec<usize>, detail: impl Into<String>) -> Self {
        Anomaly {
            kind,
            vertices,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Anomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:?}: {}",
            self.kind.name(),
            self.vertices,
            self.detail
        )
    }
}
