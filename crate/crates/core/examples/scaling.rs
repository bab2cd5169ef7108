//! Small scaling run: linear matchers against the closure simulation.
//! `relmatch bench` runs the full-size version.

use relmatch::bench::{bench_scaling, BenchConfig};

fn main() {
    let config = BenchConfig {
        m: 1 << 10,
        w_lens: (14..=17).map(|k| 1 << k).collect(),
        baseline_w_lens: vec![1 << 14],
        repetitions: 3,
        ..BenchConfig::default()
    };
    let report = bench_scaling(&config);
    print!("{}", report.to_csv());
    print!("{}", report.summary());
}
