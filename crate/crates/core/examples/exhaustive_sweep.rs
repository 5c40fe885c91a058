//! Every subset of a small grid, checked in parallel.
//!
//! `cargo run --release --example exhaustive_sweep -- 4x4 3-5`

use l1_lines::search::{parse_grid, parse_range, run_sweep, SweepConfig};

fn main() -> l1_lines::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (w, h) = parse_grid(args.first().map_or("4x4", String::as_str))?;
    let (n_min, n_max) = parse_range(args.get(1).map_or("3-5", String::as_str))?;
    let cfg = SweepConfig {
        grid_width: w,
        grid_height: h,
        n_min,
        n_max,
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..SweepConfig::default()
    };
    let r = run_sweep(&cfg)?;
    println!(
        "{} subsets, {} with a universal line",
        r.instances_tested, r.universal_count
    );
    println!("bound violations: {}", r.bound_violations);
    if let Some(m) = &r.min_ratio {
        println!(
            "fewest lines per point: {}/{} at instance {}",
            m.lines, m.n, m.index
        );
        print!("{}", m.witness);
    }
    for (n, hist) in &r.histogram {
        println!("n = {n}: {hist:?}");
    }
    println!("isolated vertices by lemma: {:?}", r.lemma_counts);
    println!("anomalies: {:?}", r.anomaly_counts);
    Ok(())
}
