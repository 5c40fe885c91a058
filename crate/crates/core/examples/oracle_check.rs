//! Lines of an arbitrary finite metric space, and the cross-check of the
//! fast planar enumeration against that generic route.

use l1_lines::oracle::{lines_from_matrix, matrix_from_points, oracle_check, parse_matrix};
use l1_lines::{MetricKind, PointSet};

fn main() -> l1_lines::Result<()> {
    // The 4-cycle with unit edges: opposite vertices at distance 2.
    let c4 = parse_matrix("4\n0 1 2 1\n1 0 1 2\n2 1 0 1\n1 2 1 0\n")?;
    let catalog = lines_from_matrix(&c4);
    println!("4-cycle: {} lines", catalog.len());
    for members in catalog.entries.keys() {
        println!("  {members:?}");
    }

    let set = PointSet::from_ints(&[(0, 0), (4, 1), (1, 3), (3, 3), (2, 5)])?;
    for metric in [MetricKind::L1, MetricKind::Linf] {
        match oracle_check(&set, metric)? {
            None => println!("{metric}: enumeration matches the matrix oracle"),
            Some(diff) => println!("{metric}: mismatch, {diff}"),
        }
    }
    print!(
        "L1 distance matrix:\n{}",
        matrix_from_points(&set, MetricKind::L1)?.to_text()
    );
    Ok(())
}
