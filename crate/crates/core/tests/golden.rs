//! Arrow graphs of small regression sets against expectations produced by
//! an independent brute force over distance sums.

use std::path::PathBuf;

use l1_lines::arrows::{build_graph_from, coinciding_pairs, Color};
use l1_lines::io::parse_point_set;
use l1_lines::{enumerate_lines, verify_theorem, MetricKind, PointSet};

fn golden(name: &str) -> (PointSet, Vec<String>) {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let input = std::fs::read_to_string(dir.join(format!("{name}.txt"))).unwrap();
    let expected = std::fs::read_to_string(dir.join(format!("{name}.expected"))).unwrap();
    let mut lines: Vec<String> = expected.lines().map(str::to_owned).collect();
    lines.sort();
    (parse_point_set(&input).unwrap(), lines)
}

fn render(set: &PointSet) -> Vec<String> {
    let p = |i: usize| format!("{} {}", set.point(i).x, set.point(i).y);
    let catalog = enumerate_lines(set, MetricKind::L1).unwrap();
    let graph = build_graph_from(set, &catalog);
    let mut out = vec![
        format!("lines {}", catalog.len()),
        format!("universal {}", catalog.has_universal()),
    ];
    for a in &graph.arrows {
        let color = match a.color {
            Color::Blue => "blue",
            Color::Red => "red",
        };
        out.push(format!("{color} {} -> {}", p(a.tail), p(a.head)));
    }
    for c in coinciding_pairs(set, &graph).pairs {
        out.push(format!(
            "coinciding {} -> {} | {} -> {}",
            p(c.blue.tail),
            p(c.blue.head),
            p(c.red.tail),
            p(c.red.head)
        ));
    }
    out.sort();
    out
}

fn check(name: &str) {
    let (set, expected) = golden(name);
    assert_eq!(render(&set), expected, "{name}");
    let report = verify_theorem(&set).unwrap();
    assert!(report.is_clean(), "{name}: {:?}", report.anomalies);
}

#[test]
fn rect_plus_two() {
    check("rect_plus_two");
}

#[test]
fn staircase() {
    check("staircase");
}

#[test]
fn crossed_rectangles() {
    check("crossed_rectangles");
}
