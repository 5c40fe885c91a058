//! Blue and red arrows, the arrow graph, and coinciding arrow pairs.
//!
//! Increasing pairs are grouped by the line they induce. Within a group,
//! pairs are ordered by head (smaller first) and on equal heads by tail
//! (larger first); the least pair, directed from its smaller to its
//! larger point, is the group's blue arrow. Decreasing pairs give red
//! arrows the same way, using the decreasing order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::error::{Error, Result};
use crate::geometry::{classify_pair, lt_d, lt_i, MetricKind, Order, PairClass, PointSet};
use crate::lines::{enumerate_lines, line_of, LineCatalog};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn order(self) -> Order {
        match self {
            Color::Blue => Order::Increasing,
            Color::Red => Order::Decreasing,
        }
    }

    pub fn swapped(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
    pub color: Color,
}

impl Arrow {
    pub fn new(tail: usize, head: usize, color: Color) -> Self {
        Arrow { tail, head, color }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }
}

/// An ordered pair `(tail, head)` with `tail` below `head` in the class order.
pub type OrientedPair = (usize, usize);

/// Increasing (or decreasing) pairs grouped by induced line.
pub fn line_classes(
    set: &PointSet,
    catalog: &LineCatalog,
    order: Order,
) -> BTreeMap<Vec<usize>, Vec<OrientedPair>> {
    let wanted = order.pair_class();
    let mut classes: BTreeMap<Vec<usize>, Vec<OrientedPair>> = BTreeMap::new();
    for (line, gens) in &catalog.entries {
        for &(i, j) in gens {
            if classify_pair(set.point(i), set.point(j)).ok() != Some(wanted) {
                continue;
            }
            let pair = if order.leq(set.point(i), set.point(j)) {
                (i, j)
            } else {
                (j, i)
            };
            classes.entry(line.clone()).or_default().push(pair);
        }
    }
    classes
}

/// Compares two oriented pairs of the same class: the smaller head wins,
/// and on equal heads the larger tail wins.
pub fn compare_in_class(
    set: &PointSet,
    first: OrientedPair,
    second: OrientedPair,
    order: Order,
) -> Result<Ordering> {
    let (p, q) = (set.point(first.0), set.point(first.1));
    let (a, b) = (set.point(second.0), set.point(second.1));
    let incomparable = || {
        Error::Incomparable(format!(
            "{first:?} and {second:?} under the {order:?} order"
        ))
    };
    if q == b {
        if p == a {
            Ok(Ordering::Equal)
        } else if order.lt(a, p) {
            Ok(Ordering::Less)
        } else if order.lt(p, a) {
            Ok(Ordering::Greater)
        } else {
            Err(incomparable())
        }
    } else if order.lt(q, b) {
        Ok(Ordering::Less)
    } else if order.lt(b, q) {
        Ok(Ordering::Greater)
    } else {
        Err(incomparable())
    }
}

/// The pair order restricted to pairs inducing the same line.
///
/// Both pairs are given oriented (`tail ≤ head` in `order`); pairs that
/// induce different lines are incomparable.
pub fn pair_leq_star(
    set: &PointSet,
    first: OrientedPair,
    second: OrientedPair,
    order: Order,
) -> Result<bool> {
    let l1 = line_of(set, first.0, first.1, MetricKind::L1)?;
    let l2 = line_of(set, second.0, second.1, MetricKind::L1)?;
    if l1 != l2 {
        return Err(Error::Incomparable(format!(
            "{first:?} and {second:?} induce different lines"
        )));
    }
    Ok(compare_in_class(set, first, second, order)? != Ordering::Greater)
}

/// The least pair of a class, or a description of why it has none.
fn least_pair(
    set: &PointSet,
    class: &[OrientedPair],
    order: Order,
) -> Result<OrientedPair, String> {
    let mut best = class[0];
    for &pair in &class[1..] {
        match compare_in_class(set, pair, best, order) {
            Ok(Ordering::Less) => best = pair,
            Ok(_) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    // The scan above only finds the least element if the class is totally
    // ordered; confirm against every member.
    for &pair in class {
        match compare_in_class(set, best, pair, order) {
            Ok(Ordering::Greater) => return Err(format!("{best:?} is not below {pair:?}")),
            Ok(_) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Serialize)]
pub struct ArrowGraph {
    pub n: usize,
    /// Sorted by tail, then head, then color.
    pub arrows: Vec<Arrow>,
    /// The line induced by each arrow, parallel to `arrows`.
    pub lines: Vec<Vec<usize>>,
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    /// Classes that produced no arrow.
    pub skipped: Vec<Anomaly>,
    #[serde(skip)]
    by_line: HashMap<(Color, Vec<usize>), usize>,
}

impl ArrowGraph {
    fn from_parts(n: usize, mut parts: Vec<(Arrow, Vec<usize>)>, skipped: Vec<Anomaly>) -> Self {
        parts.sort();
        let mut out_degree = vec![0; n];
        let mut in_degree = vec![0; n];
        let mut by_line = HashMap::new();
        for (i, (a, line)) in parts.iter().enumerate() {
            out_degree[a.tail] += 1;
            in_degree[a.head] += 1;
            by_line.insert((a.color, line.clone()), i);
        }
        let (arrows, lines) = parts.into_iter().unzip();
        ArrowGraph {
            n,
            arrows,
            lines,
            out_degree,
            in_degree,
            skipped,
            by_line,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_degree[v] + self.in_degree[v]
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }

    pub fn isolated(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_isolated(v)).collect()
    }

    pub fn contains(&self, arrow: &Arrow) -> bool {
        self.arrows.binary_search(arrow).is_ok()
    }

    pub fn of_color(&self, color: Color) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows.iter().filter(move |a| a.color == color)
    }

    pub fn arrows_into(&self, v: usize, color: Color) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows
            .iter()
            .filter(move |a| a.head == v && a.color == color)
    }

    /// The arrow of `color` whose line has exactly these members.
    pub fn arrow_for_line(&self, color: Color, members: &[usize]) -> Option<Arrow> {
        self.by_line
            .get(&(color, members.to_vec()))
            .map(|&i| self.arrows[i])
    }

    pub fn line_of_arrow(&self, arrow: &Arrow) -> Option<&[usize]> {
        self.arrows
            .binary_search(arrow)
            .ok()
            .map(|i| self.lines[i].as_slice())
    }
}

fn arrows_of_color(
    set: &PointSet,
    catalog: &LineCatalog,
    color: Color,
    skipped: &mut Vec<Anomaly>,
) -> Vec<(Arrow, Vec<usize>)> {
    let order = color.order();
    let strict = match color {
        Color::Blue => lt_i,
        Color::Red => lt_d,
    };
    let mut out = Vec::new();
    for (line, class) in line_classes(set, catalog, order) {
        match least_pair(set, &class, order) {
            Ok((tail, head)) if strict(set.point(tail), set.point(head)) => {
                out.push((Arrow::new(tail, head, color), line));
            }
            Ok(pair) => skipped.push(Anomaly::new(
                AnomalyKind::ClassOrder,
                vec![pair.0, pair.1],
                format!("least {color:?} pair of line {line:?} is not strictly ordered"),
            )),
            Err(why) => skipped.push(Anomaly::new(
                AnomalyKind::ClassOrder,
                line.clone(),
                format!("{color:?} class of line {line:?}: {why}"),
            )),
        }
    }
    out
}

pub fn blue_arrows(set: &PointSet) -> Result<Vec<Arrow>> {
    Ok(build_graph(set)?.of_color(Color::Blue).copied().collect())
}

pub fn red_arrows(set: &PointSet) -> Result<Vec<Arrow>> {
    Ok(build_graph(set)?.of_color(Color::Red).copied().collect())
}

pub fn build_graph(set: &PointSet) -> Result<ArrowGraph> {
    let catalog = enumerate_lines(set, MetricKind::L1)?;
    Ok(build_graph_from(set, &catalog))
}

/// Builds the arrow graph from an L1 catalog of `set`.
pub fn build_graph_from(set: &PointSet, catalog: &LineCatalog) -> ArrowGraph {
    let mut skipped = Vec::new();
    let mut parts = arrows_of_color(set, catalog, Color::Blue, &mut skipped);
    parts.extend(arrows_of_color(set, catalog, Color::Red, &mut skipped));
    ArrowGraph::from_parts(set.len(), parts, skipped)
}

/// A blue and a red arrow inducing the same line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoincidingPair {
    pub blue: Arrow,
    pub red: Arrow,
    pub line: Vec<usize>,
}

impl CoincidingPair {
    /// Whether the arrows are the two diagonals of one rectangle: blue runs
    /// lower-left to upper-right, red upper-left to lower-right.
    pub fn is_rectangle(&self, set: &PointSet) -> bool {
        let (a, b) = (set.point(self.blue.tail), set.point(self.blue.head));
        let (c, d) = (set.point(self.red.tail), set.point(self.red.head));
        a.x < b.x && a.y < b.y && c.x == a.x && c.y == b.y && d.x == b.x && d.y == a.y
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CoincidenceScan {
    pub pairs: Vec<CoincidingPair>,
    pub violations: Vec<Anomaly>,
}

pub fn coinciding_pairs(set: &PointSet, graph: &ArrowGraph) -> CoincidenceScan {
    let mut scan = CoincidenceScan::default();
    let mut seen: HashMap<(Color, &[usize]), Arrow> = HashMap::new();
    for (arrow, line) in graph.arrows.iter().zip(&graph.lines) {
        if let Some(prev) = seen.insert((arrow.color, line.as_slice()), *arrow) {
            scan.violations.push(Anomaly::new(
                AnomalyKind::ClassOrder,
                vec![prev.tail, prev.head, arrow.tail, arrow.head],
                format!("two {:?} arrows induce line {line:?}", arrow.color),
            ));
        }
    }
    for (blue, line) in graph.arrows.iter().zip(&graph.lines) {
        if blue.color != Color::Blue {
            continue;
        }
        if let Some(red) = graph.arrow_for_line(Color::Red, line) {
            let pair = CoincidingPair {
                blue: *blue,
                red,
                line: line.clone(),
            };
            if !pair.is_rectangle(set) {
                scan.violations.push(Anomaly::new(
                    AnomalyKind::Rectangle,
                    vec![blue.tail, blue.head, red.tail, red.head],
                    format!("blue {blue:?} and red {red:?} share line {line:?} but are not rectangle diagonals"),
                ));
            }
            scan.pairs.push(pair);
        }
    }
    scan
}

/// The graph without the blue arrow of each coinciding pair.
pub fn pruned_graph(graph: &ArrowGraph, coinciding: &[CoincidingPair]) -> ArrowGraph {
    let parts = graph
        .arrows
        .iter()
        .zip(&graph.lines)
        .filter(|(a, _)| !coinciding.iter().any(|c| c.blue == **a))
        .map(|(a, l)| (*a, l.clone()))
        .collect();
    ArrowGraph::from_parts(graph.n, parts, graph.skipped.clone())
}

/// Whether coinciding rectangles pairwise cross in their middle parts.
///
/// Sorted by the x-coordinate of the blue tails, the blue tails must form
/// a strictly decreasing chain, the blue heads the reverse one, the red
/// tails a strictly increasing chain and the red heads the reverse one.
pub fn nesting_check(set: &PointSet, coinciding: &[CoincidingPair]) -> bool {
    let mut sorted: Vec<&CoincidingPair> = coinciding.iter().collect();
    sorted.sort_by(|u, v| set.point(u.blue.tail).x.cmp(&set.point(v.blue.tail).x));
    sorted.windows(2).all(|w| {
        let (u, v) = (w[0], w[1]);
        let pt = |i: usize| set.point(i);
        lt_d(pt(u.blue.tail), pt(v.blue.tail))
            && lt_d(pt(v.blue.head), pt(u.blue.head))
            && lt_i(pt(u.red.tail), pt(v.red.tail))
            && lt_i(pt(v.red.head), pt(u.red.head))
            && classify_pair(pt(u.blue.tail), pt(v.blue.tail)).ok() == Some(PairClass::Decreasing)
            && classify_pair(pt(u.blue.head), pt(v.blue.head)).ok() == Some(PairClass::Decreasing)
            && classify_pair(pt(u.red.tail), pt(v.red.tail)).ok() == Some(PairClass::Increasing)
            && classify_pair(pt(u.red.head), pt(v.red.head)).ok() == Some(PairClass::Increasing)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> PointSet {
        PointSet::from_ints(c).unwrap()
    }

    fn coords(set: &PointSet, arrows: &[Arrow]) -> Vec<((i64, i64), (i64, i64))> {
        let int = |i: usize| {
            let p = set.point(i);
            (
                p.x.to_string().parse().unwrap(),
                p.y.to_string().parse().unwrap(),
            )
        };
        let mut v: Vec<_> = arrows.iter().map(|a| (int(a.tail), int(a.head))).collect();
        v.sort();
        v
    }

    fn rect_plus_two() -> PointSet {
        pts(&[(0, 0), (2, 2), (0, 2), (2, 0), (1, 1), (3, 1)])
    }

    // Crossed rectangles with the common center point.
    fn crossed() -> PointSet {
        pts(&[
            (0, 2),
            (8, 4),
            (0, 4),
            (8, 2),
            (2, 0),
            (6, 6),
            (2, 6),
            (6, 0),
            (4, 3),
        ])
    }

    #[test]
    fn rect_plus_two_arrows() {
        let x = rect_plus_two();
        let g = build_graph(&x).unwrap();
        let blue: Vec<Arrow> = g.of_color(Color::Blue).copied().collect();
        let red: Vec<Arrow> = g.of_color(Color::Red).copied().collect();
        assert_eq!(
            coords(&x, &blue),
            vec![
                ((0, 0), (1, 1)),
                ((0, 0), (2, 2)),
                ((0, 0), (3, 1)),
                ((1, 1), (2, 2)),
                ((2, 0), (3, 1))
            ]
        );
        assert_eq!(
            coords(&x, &red),
            vec![
                ((0, 2), (1, 1)),
                ((0, 2), (2, 0)),
                ((0, 2), (3, 1)),
                ((1, 1), (2, 0)),
                ((2, 2), (3, 1))
            ]
        );
        assert!(g.skipped.is_empty());
        assert!(2 * g.edge_count() >= x.len() + 2);

        let scan = coinciding_pairs(&x, &g);
        assert!(scan.violations.is_empty());
        assert_eq!(scan.pairs.len(), 1);
        let pair = &scan.pairs[0];
        assert_eq!(coords(&x, &[pair.blue]), vec![((0, 0), (2, 2))]);
        assert_eq!(coords(&x, &[pair.red]), vec![((0, 2), (2, 0))]);
        assert!(pair.is_rectangle(&x));

        let pruned = pruned_graph(&g, &scan.pairs);
        assert_eq!(pruned.edge_count(), g.edge_count() - 1);
        assert!(!pruned.contains(&pair.blue));
        assert!(pruned.contains(&pair.red));
    }

    #[test]
    fn staircase_arrows() {
        let x = pts(&[(0, 0), (1, 1), (2, 2), (0, 3)]);
        let g = build_graph(&x).unwrap();
        let blue: Vec<Arrow> = g.of_color(Color::Blue).copied().collect();
        let red: Vec<Arrow> = g.of_color(Color::Red).copied().collect();
        assert_eq!(coords(&x, &blue), vec![((0, 0), (1, 1))]);
        assert_eq!(coords(&x, &red), vec![((0, 3), (1, 1)), ((0, 3), (2, 2))]);
    }

    #[test]
    fn axis_parallel_sets_have_no_arrows() {
        assert_eq!(
            build_graph(&pts(&[(0, 0), (1, 0), (5, 0)]))
                .unwrap()
                .edge_count(),
            0
        );
        assert_eq!(
            build_graph(&pts(&[(2, 0), (2, 1), (2, 3)]))
                .unwrap()
                .edge_count(),
            0
        );
    }

    #[test]
    fn pair_order_examples() {
        // The three increasing pairs of the staircase diagonal all induce
        // the same line.
        let x = pts(&[(0, 0), (1, 1), (2, 2), (0, 3)]);
        let inc = Order::Increasing;
        // Smaller head wins.
        assert!(pair_leq_star(&x, (0, 1), (1, 2), inc).unwrap());
        assert!(!pair_leq_star(&x, (1, 2), (0, 1), inc).unwrap());
        // Equal heads: the larger tail wins.
        assert!(pair_leq_star(&x, (1, 2), (0, 2), inc).unwrap());
        assert!(!pair_leq_star(&x, (0, 2), (1, 2), inc).unwrap());
        assert!(pair_leq_star(&x, (0, 2), (0, 2), inc).unwrap());
        // Pairs on different lines are not comparable.
        let r = rect_plus_two();
        assert!(pair_leq_star(&r, (0, 1), (4, 1), inc).is_err());
    }

    #[test]
    fn pair_order_is_total_on_each_class() {
        for x in [rect_plus_two(), crossed()] {
            let catalog = enumerate_lines(&x, MetricKind::L1).unwrap();
            for order in [Order::Increasing, Order::Decreasing] {
                for class in line_classes(&x, &catalog, order).values() {
                    for &p in class {
                        for &q in class {
                            let pq = compare_in_class(&x, p, q, order).unwrap();
                            let qp = compare_in_class(&x, q, p, order).unwrap();
                            assert_eq!(pq, qp.reverse());
                            assert_eq!(pq == Ordering::Equal, p == q);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn crossed_rectangles_nest() {
        let x = crossed();
        let g = build_graph(&x).unwrap();
        assert_eq!(g.edge_count(), 20);
        let scan = coinciding_pairs(&x, &g);
        assert!(scan.violations.is_empty());
        assert_eq!(scan.pairs.len(), 2);
        assert!(scan.pairs.iter().all(|p| p.is_rectangle(&x)));
        assert!(nesting_check(&x, &scan.pairs));
        assert!(nesting_check(&x, &scan.pairs[..1]));
        let pruned = pruned_graph(&g, &scan.pairs);
        assert_eq!(pruned.edge_count(), 18);
    }

    #[test]
    fn disjoint_rectangles_fail_the_nesting_check() {
        let x = pts(&[
            (0, 0),
            (1, 1),
            (0, 1),
            (1, 0),
            (3, 0),
            (4, 1),
            (3, 1),
            (4, 0),
        ]);
        let pair = |a, b, c, d| CoincidingPair {
            blue: Arrow::new(a, b, Color::Blue),
            red: Arrow::new(c, d, Color::Red),
            line: vec![],
        };
        let fabricated = [pair(0, 1, 2, 3), pair(4, 5, 6, 7)];
        assert!(fabricated.iter().all(|p| p.is_rectangle(&x)));
        assert!(!nesting_check(&x, &fabricated));
    }

    #[test]
    fn pruned_lines_are_distinct() {
        for x in [rect_plus_two(), crossed()] {
            let g = build_graph(&x).unwrap();
            let pruned = pruned_graph(&g, &coinciding_pairs(&x, &g).pairs);
            let mut lines = pruned.lines.clone();
            lines.sort();
            lines.dedup();
            assert_eq!(lines.len(), pruned.edge_count());
        }
    }
}
