//! Seeded random sets, with the L∞ and oracle cross-checks switched on.
//! The same seed always gives the same report, whatever the worker count.

use l1_lines::search::{run_sweep, SweepConfig, SweepMode};

fn main() -> l1_lines::Result<()> {
    let cfg = SweepConfig {
        mode: SweepMode::Random,
        sample_count: 500,
        n_min: 10,
        n_max: 20,
        coord_bound: 25,
        seed: 2024,
        workers: 4,
        check_linf: true,
        check_oracle: true,
        ..SweepConfig::default()
    };
    print!("{}", cfg.canonical_text());
    let r = run_sweep(&cfg)?;
    println!("{} sets, {} anomalies", r.instances_tested, r.anomaly_total);
    if let Some(m) = &r.min_ratio {
        println!(
            "fewest lines: {} for n = {} (instance {})",
            m.lines, m.n, m.index
        );
    }
    for a in r.anomalies.iter().take(5) {
        println!("instance {}: {}", a.index, a.anomaly);
    }
    Ok(())
}
