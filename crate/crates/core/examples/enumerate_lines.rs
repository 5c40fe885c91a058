//! Lists every L1 line of a small set: members and the pairs inducing it.
//!
//! Run with `cargo run --example enumerate_lines`.

use l1_lines::{enumerate_lines, MetricKind, PointSet};

fn main() -> l1_lines::Result<()> {
    // A 2x2 square with its center and one point off to the right.
    let set = PointSet::from_ints(&[(0, 0), (2, 2), (0, 2), (2, 0), (1, 1), (3, 1)])?;
    let catalog = enumerate_lines(&set, MetricKind::L1)?;

    println!("{} points, {} distinct lines", set.len(), catalog.len());
    for (members, generators) in &catalog.entries {
        let pts: Vec<String> = members.iter().map(|&i| set.point(i).to_string()).collect();
        println!("  {{{}}} from {} pair(s)", pts.join(", "), generators.len());
    }
    println!("universal line: {}", catalog.has_universal());
    Ok(())
}
