//! L∞ lines are L1 lines in disguise: rotating by 45 degrees,
//! `(x, y) -> (x + y, x - y)`, doubles every L∞ distance into an L1 one.

use l1_lines::oracle::{linf_line_count, rotate_45};
use l1_lines::{count_distinct_lines, MetricKind, PointSet};

fn main() -> l1_lines::Result<()> {
    let set = PointSet::from_ints(&[(0, 0), (3, 1), (1, 4), (-2, 2), (5, 5), (2, -3)])?;
    let rotated = rotate_45(&set);
    for (p, q) in set.points().iter().zip(rotated.points()) {
        println!("{p} -> {q}");
    }
    let linf = count_distinct_lines(&set, MetricKind::Linf)?;
    let l1 = count_distinct_lines(&rotated, MetricKind::L1)?;
    println!("L∞ lines of the set: {}", linf.count);
    println!("L1 lines of the rotated set: {}", l1.count);

    // Checks the correspondence line by line.
    let checked = linf_line_count(&set)?;
    println!(
        "line-by-line check passed, universal: {}",
        checked.has_universal
    );
    Ok(())
}
