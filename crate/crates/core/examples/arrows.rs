//! Blue and red arrows, coinciding pairs and pruning.

use l1_lines::arrows::{build_graph, coinciding_pairs, pruned_graph, Color};
use l1_lines::PointSet;

fn main() -> l1_lines::Result<()> {
    let set = PointSet::from_ints(&[(0, 0), (2, 2), (0, 2), (2, 0), (1, 1), (3, 1)])?;
    let graph = build_graph(&set)?;
    for color in [Color::Blue, Color::Red] {
        println!("{color:?} arrows:");
        for a in graph.of_color(color) {
            println!("  {} -> {}", set.point(a.tail), set.point(a.head));
        }
    }

    // The two diagonals of the square induce the same line.
    let scan = coinciding_pairs(&set, &graph);
    for p in &scan.pairs {
        println!(
            "coinciding: blue {} -> {} and red {} -> {}",
            set.point(p.blue.tail),
            set.point(p.blue.head),
            set.point(p.red.tail),
            set.point(p.red.head)
        );
    }
    let pruned = pruned_graph(&graph, &scan.pairs);
    println!(
        "{} arrows, {} after pruning",
        graph.edge_count(),
        pruned.edge_count()
    );
    println!("out-degrees: {:?}", graph.out_degree);
    Ok(())
}
