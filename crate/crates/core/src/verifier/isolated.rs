//! Witnesses for isolated vertices of the arrow graph.
//!
//! For an isolated vertex `a` whose second quadrant is empty, the analysis
//! finds a point `s` sharing a coordinate with `a` that receives two arrows
//! of one color. When only the third quadrant is empty the same analysis
//! runs on the set reflected across a horizontal axis, which swaps the
//! roles of blue and red.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::arrows::{build_graph_from, Arrow, ArrowGraph, Color};
use crate::geometry::{classify_pair, l1_distance, MetricKind, PairClass, Point, PointSet};
use crate::lines::{line_of, LineCatalog};
use crate::region::{Interval, Quadrant, Region, Side};

/// Set of quadrants of a point that contain no other point.
pub type QuadrantSet = BTreeSet<Quadrant>;

pub fn quadrant_census(set: &PointSet, a: usize) -> QuadrantSet {
    let pa = set.point(a);
    Quadrant::ALL
        .into_iter()
        .filter(|&q| Region::quadrant(pa, q).is_empty_in(set, &[]))
        .collect()
}

/// Whether the first, second and fourth quadrants of `a` are all empty.
pub fn is_special(census: &QuadrantSet) -> bool {
    [Quadrant::First, Quadrant::Second, Quadrant::Fourth]
        .iter()
        .all(|q| census.contains(q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Placement {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaUsed {
    TwoD,
    TwoArrows1,
    TwoEmptyQ,
    MirrorTwoD,
    MirrorTwoArrows1,
    MirrorTwoEmptyQ,
}

impl LemmaUsed {
    fn mirrored(self) -> LemmaUsed {
        match self {
            LemmaUsed::TwoD => LemmaUsed::MirrorTwoD,
            LemmaUsed::TwoArrows1 => LemmaUsed::MirrorTwoArrows1,
            LemmaUsed::TwoEmptyQ => LemmaUsed::MirrorTwoEmptyQ,
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatedReport {
    pub a: usize,
    pub empty_quadrants: QuadrantSet,
    pub mirrored: bool,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
    pub arrow1_placement: Option<Placement>,
    pub arrow2_placement: Option<Placement>,
    pub s: usize,
    pub color: Color,
    pub witness_arrows: [Arrow; 2],
    pub lemma_used: LemmaUsed,
}

/// The point of `region` nearest to `a` in L1, ties broken by `(x, y)`.
fn nearest_in(set: &PointSet, region: &Region, a: &Point) -> Option<usize> {
    region.members(set).min_by(|&i, &j| {
        let (pi, pj) = (set.point(i), set.point(j));
        l1_distance(pi, a)
            .cmp(&l1_distance(pj, a))
            .then_with(|| pi.cmp(pj))
    })
}

/// `d1` condition: the right half-strip with corners `a` and
/// `(x(a), y(d))` is empty, and so is the segment `(x(a), x(d)) × {y(d)}`.
pub fn is_d1_witness(set: &PointSet, a: usize, d: usize) -> bool {
    let (pa, pd) = (set.point(a), set.point(d));
    let corner = Point::new(pa.x.clone(), pd.y.clone());
    Region::quadrant(pa, Quadrant::Fourth).contains(pd)
        && Region::half_strip(pa, &corner, Side::Right).is_empty_in(set, &[])
        && Region::horizontal(Interval::open(&pa.x, &pd.x), &pd.y).is_empty_in(set, &[])
}

/// `d2` condition: the lower half-strip with corners `a` and
/// `(x(d), y(a))` is empty, and so is the segment `{x(d)} × (y(d), y(a))`.
pub fn is_d2_witness(set: &PointSet, a: usize, d: usize) -> bool {
    let (pa, pd) = (set.point(a), set.point(d));
    let corner = Point::new(pd.x.clone(), pa.y.clone());
    Region::quadrant(pa, Quadrant::Fourth).contains(pd)
        && Region::half_strip(pa, &corner, Side::Lower).is_empty_in(set, &[])
        && Region::vertical(&pd.x, Interval::open(&pd.y, &pa.y)).is_empty_in(set, &[])
}

/// Picks `d1` and `d2` in the fourth quadrant of `a`. Among several valid
/// witnesses the one nearest to `a` wins, then the lexicographically
/// smallest.
pub fn find_d1_d2(set: &PointSet, a: usize) -> Option<(usize, usize)> {
    let pa = set.point(a);
    let pick = |ok: &dyn Fn(usize) -> bool| {
        (0..set.len())
            .filter(|&d| d != a && ok(d))
            .min_by(|&i, &j| {
                let (pi, pj) = (set.point(i), set.point(j));
                l1_distance(pi, pa)
                    .cmp(&l1_distance(pj, pa))
                    .then_with(|| pi.cmp(pj))
            })
    };
    let d1 = pick(&|d| is_d1_witness(set, a, d))?;
    let d2 = pick(&|d| is_d2_witness(set, a, d))?;
    Some((d1, d2))
}

/// Which of the four placements the arrow `(t, w)` for `⟨a, d⟩` takes.
pub fn classify_placement(set: &PointSet, a: usize, d: usize, arrow: &Arrow) -> Option<Placement> {
    let (pa, pd) = (set.point(a), set.point(d));
    let (t, w) = (set.point(arrow.tail), set.point(arrow.head));
    let opt_a =
        Region::horizontal(Interval::open(&pa.x, &pd.x), &pa.y).contains(t) && arrow.head == d;
    let opt_b =
        Region::vertical(&pa.x, Interval::open(&pd.y, &pa.y)).contains(t) && arrow.head == d;
    let opt_c = Region::vertical(&pa.x, Interval::above(&pa.y)).contains(t)
        && Region::horizontal(Interval::open_closed(&pa.x, &pd.x), &pa.y).contains(w);
    let opt_d = Region::horizontal(Interval::below(&pa.x), &pa.y).contains(t)
        && Region::vertical(&pa.x, Interval::closed_open(&pd.y, &pa.y)).contains(w);
    let matched: Vec<Placement> = [
        (opt_a, Placement::A),
        (opt_b, Placement::B),
        (opt_c, Placement::C),
        (opt_d, Placement::D),
    ]
    .into_iter()
    .filter(|(ok, _)| *ok)
    .map(|(_, p)| p)
    .collect();
    match matched.as_slice() {
        [one] => Some(*one),
        _ => None,
    }
}

/// One frame of the analysis: a point set and its arrow graph.
pub struct Frame<'a> {
    pub set: &'a PointSet,
    pub graph: &'a ArrowGraph,
}

impl Frame<'_> {
    fn arrow_for_pair(&self, u: usize, v: usize, color: Color) -> Option<Arrow> {
        let line = line_of(self.set, u, v, MetricKind::L1).ok()?;
        self.graph.arrow_for_line(color, &line.members)
    }

    /// A second arrow of `color` into `s`, from a tail forming a `class`
    /// pair with `r`.
    fn second_arrow(&self, r: usize, s: usize, color: Color, class: PairClass) -> Option<Arrow> {
        self.graph.arrows_into(s, color).copied().find(|arr| {
            arr.tail != r
                && classify_pair(self.set.point(r), self.set.point(arr.tail)).ok() == Some(class)
        })
    }
}

fn witness_failure(a: usize, lemma: &str, detail: String) -> Anomaly {
    Anomaly::new(AnomalyKind::Witness, vec![a], format!("{lemma}: {detail}"))
}

/// The analysis for an isolated `a` with empty second quadrant, in `frame`.
fn analyze_unmirrored(frame: &Frame<'_>, a: usize) -> Result<IsolatedReport, Anomaly> {
    let set = frame.set;
    let pa = set.point(a);
    let census = quadrant_census(set, a);
    debug_assert!(census.contains(&Quadrant::Second));

    if !census.contains(&Quadrant::Fourth) {
        let (d1, d2) = find_d1_d2(set, a).ok_or_else(|| {
            Anomaly::new(
                AnomalyKind::AssumptionViolation,
                vec![a],
                "fourth quadrant is occupied but no d1/d2 witness exists",
            )
        })?;
        let arrow_for = |d: usize| {
            frame.arrow_for_pair(a, d, Color::Red).ok_or_else(|| {
                witness_failure(
                    a,
                    "placement",
                    format!("no red arrow for the line of ({a}, {d})"),
                )
            })
        };
        let (arrow1, arrow2) = (arrow_for(d1)?, arrow_for(d2)?);
        let place = |d: usize, arrow: &Arrow| {
            classify_placement(set, a, d, arrow).ok_or_else(|| {
                Anomaly::new(
                    AnomalyKind::Placement,
                    vec![a, d, arrow.tail, arrow.head],
                    format!("red arrow {arrow:?} for ({a}, {d}) matches no placement"),
                )
            })
        };
        let p1 = place(d1, &arrow1)?;
        let p2 = place(d2, &arrow2)?;

        if d1 != d2 {
            use Placement::*;
            let (pd1, pd2) = (set.point(d1), set.point(d2));
            let allowed = matches!((p1, p2), (A, B) | (A, D) | (C, B));
            let seg_h = Region::horizontal(Interval::open_closed(&pa.x, &pd2.x), &pa.y);
            let seg_v = Region::vertical(&pa.x, Interval::closed_open(&pd1.y, &pa.y));
            if !allowed || !seg_h.is_empty_in(set, &[]) || !seg_v.is_empty_in(set, &[]) {
                return Err(Anomaly::new(
                    AnomalyKind::Locations,
                    vec![a, d1, d2],
                    format!(
                        "placements ({p1:?}, {p2:?}), segment emptiness ({}, {})",
                        seg_h.is_empty_in(set, &[]),
                        seg_v.is_empty_in(set, &[])
                    ),
                ));
            }
            let r = nearest_in(set, &Region::vertical(&pa.x, Interval::below(&pa.y)), pa)
                .ok_or_else(|| witness_failure(a, "two_d", "no point directly below a".into()))?;
            let s = nearest_in(set, &Region::horizontal(Interval::above(&pa.x), &pa.y), pa)
                .ok_or_else(|| {
                    witness_failure(a, "two_d", "no point directly right of a".into())
                })?;
            let first = Arrow::new(r, s, Color::Blue);
            if !frame.graph.contains(&first) {
                return Err(witness_failure(
                    a,
                    "two_d",
                    format!("{first:?} is not a blue arrow"),
                ));
            }
            let second = frame
                .second_arrow(r, s, Color::Blue, PairClass::Decreasing)
                .ok_or_else(|| {
                    witness_failure(
                        a,
                        "two_d",
                        format!("no second blue arrow into {s} from a tail decreasing with {r}"),
                    )
                })?;
            return Ok(IsolatedReport {
                a,
                empty_quadrants: census,
                mirrored: false,
                d1: Some(d1),
                d2: Some(d2),
                arrow1_placement: Some(p1),
                arrow2_placement: Some(p2),
                s,
                color: Color::Blue,
                witness_arrows: [first, second],
                lemma_used: LemmaUsed::TwoD,
            });
        }

        // d1 = d2: the red arrow for ⟨a, d⟩ sits in placement (c) or (d)
        // with nothing strictly between it and a.
        if !matches!(p1, Placement::C | Placement::D) {
            return Err(Anomaly::new(
                AnomalyKind::Placement,
                vec![a, d1, arrow1.tail, arrow1.head],
                format!("d1 = d2 but the red arrow {arrow1:?} has placement {p1:?}"),
            ));
        }
        let (r, s) = (arrow1.tail, arrow1.head);
        for end in [r, s] {
            if !Region::open_segment(pa, set.point(end)).is_empty_in(set, &[]) {
                return Err(Anomaly::new(
                    AnomalyKind::Placement,
                    vec![a, end],
                    format!("open segment between {a} and {end} is occupied"),
                ));
            }
        }
        let second = frame
            .second_arrow(r, s, Color::Red, PairClass::Increasing)
            .ok_or_else(|| {
                witness_failure(
                    a,
                    "two_arrows_1",
                    format!("no second red arrow into {s} from a tail increasing with {r}"),
                )
            })?;
        return Ok(IsolatedReport {
            a,
            empty_quadrants: census,
            mirrored: false,
            d1: Some(d1),
            d2: Some(d2),
            arrow1_placement: Some(p1),
            arrow2_placement: Some(p2),
            s,
            color: Color::Red,
            witness_arrows: [arrow1, second],
            lemma_used: LemmaUsed::TwoArrows1,
        });
    }

    if census.contains(&Quadrant::First) {
        return Err(Anomaly::new(
            AnomalyKind::Uncovered,
            vec![a],
            "first, second and fourth quadrants are all empty",
        ));
    }

    // Second and fourth quadrants empty, first occupied.
    let s = nearest_in(set, &Region::horizontal(Interval::above(&pa.x), &pa.y), pa)
        .ok_or_else(|| witness_failure(a, "two_empty_q", "no point directly right of a".into()))?;
    let r = nearest_in(set, &Region::vertical(&pa.x, Interval::above(&pa.y)), pa)
        .ok_or_else(|| witness_failure(a, "two_empty_q", "no point directly above a".into()))?;
    let first = Arrow::new(r, s, Color::Red);
    if !frame.graph.contains(&first) {
        return Err(witness_failure(
            a,
            "two_empty_q",
            format!("{first:?} is not a red arrow"),
        ));
    }
    let second = frame
        .second_arrow(r, s, Color::Red, PairClass::Increasing)
        .ok_or_else(|| {
            witness_failure(
                a,
                "two_empty_q",
                format!("no second red arrow into {s} from a tail increasing with {r}"),
            )
        })?;
    Ok(IsolatedReport {
        a,
        empty_quadrants: census,
        mirrored: false,
        d1: None,
        d2: None,
        arrow1_placement: None,
        arrow2_placement: None,
        s,
        color: Color::Red,
        witness_arrows: [first, second],
        lemma_used: LemmaUsed::TwoEmptyQ,
    })
}

/// The point set under analysis, with a lazily built mirror image.
pub struct Analysis<'a> {
    pub set: &'a PointSet,
    pub graph: &'a ArrowGraph,
    catalog: &'a LineCatalog,
    mirror: OnceCell<(PointSet, ArrowGraph)>,
}

impl<'a> Analysis<'a> {
    /// `catalog` must be the L1 catalog of `set`.
    pub fn new(set: &'a PointSet, graph: &'a ArrowGraph, catalog: &'a LineCatalog) -> Self {
        Analysis {
            set,
            graph,
            catalog,
            mirror: OnceCell::new(),
        }
    }

    pub fn frame(&self) -> Frame<'_> {
        Frame {
            set: self.set,
            graph: self.graph,
        }
    }

    /// The set reflected across the x-axis. Reflection preserves L1
    /// distances, so the catalog carries over unchanged.
    pub fn mirror_frame(&self) -> Frame<'_> {
        let (set, graph) = self.mirror.get_or_init(|| {
            let m = self.set.mirrored_y();
            let g = build_graph_from(&m, self.catalog);
            (m, g)
        });
        Frame { set, graph }
    }
}

/// Witness for the isolated vertex `a`. When the second quadrant of `a` is
/// occupied, the analysis runs in the mirrored frame and colors swap on the
/// way back.
pub fn isolated_witness(analysis: &Analysis<'_>, a: usize) -> Result<IsolatedReport, Anomaly> {
    let frame = analysis.frame();
    let census = quadrant_census(frame.set, a);
    if census.contains(&Quadrant::Second) {
        return analyze_unmirrored(&frame, a);
    }
    if !census.contains(&Quadrant::Third) {
        return Err(Anomaly::new(
            AnomalyKind::QuadrantLemma,
            vec![a],
            "isolated vertex with occupied second and third quadrants",
        ));
    }
    let mframe = analysis.mirror_frame();
    let mut report = analyze_unmirrored(&mframe, a).map_err(|mut an| {
        an.detail = format!("mirrored: {}", an.detail);
        an
    })?;
    report.mirrored = true;
    report.empty_quadrants = census;
    report.color = report.color.swapped();
    report.lemma_used = report.lemma_used.mirrored();
    for arrow in &mut report.witness_arrows {
        arrow.color = arrow.color.swapped();
        if !frame.graph.contains(arrow) {
            return Err(witness_failure(
                a,
                "mirror",
                format!("mirrored witness {arrow:?} is not an arrow of the original set"),
            ));
        }
    }
    Ok(report)
}
