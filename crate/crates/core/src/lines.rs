//! Lines induced by point pairs, and the catalog of all distinct lines.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    classify_pair, in_closed_box, is_between, MetricKind, PairClass, Point, PointSet,
};

/// A line: the sorted indices of its members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub members: Vec<usize>,
    pub metric: MetricKind,
}

impl Line {
    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Whether `z` belongs to the line through `u` and `v`, for `z ∉ {u, v}`.
fn on_line(u: &Point, v: &Point, z: &Point, metric: MetricKind) -> bool {
    match metric {
        // In L1, `[abc]` holds exactly when b sits in the closed bounding box
        // of a and c.
        MetricKind::L1 => {
            in_closed_box(u, z, v) || in_closed_box(z, u, v) || in_closed_box(u, v, z)
        }
        MetricKind::Linf => {
            is_between(u, z, v, metric)
                || is_between(z, u, v, metric)
                || is_between(u, v, z, metric)
        }
    }
}

pub fn line_of(set: &PointSet, u: usize, v: usize, metric: MetricKind) -> Result<Line> {
    let pu = set.get(u)?;
    let pv = set.get(v)?;
    if u == v {
        return Err(Error::DegeneratePair);
    }
    let members = set
        .points()
        .iter()
        .enumerate()
        .filter(|&(z, pz)| z == u || z == v || on_line(pu, pv, pz, metric))
        .map(|(z, _)| z)
        .collect();
    Ok(Line { members, metric })
}

/// All distinct lines of a point set, each with the unordered pairs that
/// generate it. Pairs are stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineCatalog {
    pub n: usize,
    pub entries: BTreeMap<Vec<usize>, Vec<(usize, usize)>>,
}

impl LineCatalog {
    /// Builds a catalog from any membership rule `line(i, j)`.
    pub fn from_pairs(n: usize, mut line: impl FnMut(usize, usize) -> Vec<usize>) -> Self {
        let mut entries: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                entries.entry(line(i, j)).or_default().push((i, j));
            }
        }
        LineCatalog { n, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn has_universal(&self) -> bool {
        self.entries.keys().any(|k| k.len() == self.n)
    }

    pub fn generator_count(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    /// Members of the line generated by `{i, j}`.
    pub fn line_members(&self, i: usize, j: usize) -> Option<&[usize]> {
        let key = (i.min(j), i.max(j));
        self.entries
            .iter()
            .find(|(_, gens)| gens.contains(&key))
            .map(|(k, _)| k.as_slice())
    }

    /// Number of generators per pair class.
    pub fn class_totals(&self, set: &PointSet) -> BTreeMap<PairClass, usize> {
        let mut totals = BTreeMap::new();
        for &(i, j) in self.entries.values().flatten() {
            if let Ok(c) = classify_pair(set.point(i), set.point(j)) {
                *totals.entry(c).or_insert(0) += 1;
            }
        }
        totals
    }
}

pub fn enumerate_lines(set: &PointSet, metric: MetricKind) -> Result<LineCatalog> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: set.len(),
        });
    }
    Ok(LineCatalog::from_pairs(set.len(), |i, j| {
        line_of(set, i, j, metric)
            .expect("indices are distinct and in range")
            .members
    }))
}

pub fn is_universal(line: &Line, set: &PointSet) -> bool {
    line.members.len() == set.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineCount {
    pub count: usize,
    pub has_universal: bool,
}

pub fn count_distinct_lines(set: &PointSet, metric: MetricKind) -> Result<LineCount> {
    let catalog = enumerate_lines(set, metric)?;
    Ok(LineCount {
        count: catalog.len(),
        has_universal: catalog.has_universal(),
    })
}

/// `⌈n/2⌉`
pub fn half_ceil(n: usize) -> usize {
    n.div_ceil(2)
}
