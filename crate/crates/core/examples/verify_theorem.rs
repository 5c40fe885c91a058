//! Runs the certifying checker on a set and prints what it found.
//!
//! Every step of the counting argument is checked: the arrow graph, a
//! witness for each isolated vertex, the injective map built from those
//! witnesses, coinciding arrows and the final degree count. A failed step
//! shows up as an anomaly rather than a panic.

use l1_lines::{verify_theorem, PointSet};

fn main() -> l1_lines::Result<()> {
    let sets = [
        ("staircase", vec![(0, 0), (1, 1), (2, 2), (0, 3)]),
        (
            "crossed rectangles",
            vec![
                (0, 2),
                (8, 4),
                (0, 4),
                (8, 2),
                (2, 0),
                (6, 6),
                (2, 6),
                (6, 0),
                (4, 3),
            ],
        ),
        (
            "one isolated vertex",
            vec![(0, 0), (0, 2), (1, 3), (2, 0), (3, 1)],
        ),
        ("lower right corner", vec![(0, 0), (1, 2), (2, 1), (3, 0)]),
        ("three in a row", vec![(0, 0), (1, 0), (2, 0)]),
    ];
    for (name, coords) in sets {
        let set = PointSet::from_ints(&coords)?;
        let r = verify_theorem(&set)?;
        println!(
            "{name}: n = {}, lines = {}, need {}",
            r.n, r.distinct_line_count, r.required_lines
        );
        if r.universal {
            println!("  a line contains every point");
            continue;
        }
        println!(
            "  frame: {:?}, isolated: {:?}, coinciding pairs: {}",
            r.symmetry,
            r.isolated,
            r.coinciding.len()
        );
        for w in &r.isolated_reports {
            println!(
                "  vertex {} handled by {:?}, arrows end in {}",
                w.a, w.lemma_used, w.s
            );
        }
        if let Some(audit) = &r.audit {
            println!(
                "  arrows {} (pruned {}), 2|E| >= n + 2k: {}",
                audit.edge_count, audit.pruned_edge_count, audit.inequality_holds
            );
        }
        println!("  clean: {}", r.is_clean());
        for a in &r.anomalies {
            println!("  anomaly: {a}");
        }
    }
    Ok(())
}
