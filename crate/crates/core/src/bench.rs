//! Scaling measurements: linear matchers against the closure-automaton
//! simulation.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automaton::{ENfa, Symbol, TransitionIndex};
use crate::closure::{downward_automaton, upward_automaton};
use crate::linear::{match_subsequence_with_stats, SupersequenceMatcher};
use crate::random::{random_word, subsequence_bench_nfa, supersequence_bench_nfa};
use crate::relation::RelationKind;
use crate::simulate::Simulator;

pub const CSV_HEADER: &str = "engine,relation,m,w_len,ns,work";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub relations: Vec<RelationKind>,
    /// Transitions of the generated automaton.
    pub m: usize,
    pub sigma: u32,
    pub w_lens: Vec<usize>,
    /// Timed runs per row; the median is reported.
    pub repetitions: usize,
    pub seed: u64,
    /// Text lengths at which the baseline simulation is also timed.
    pub baseline_w_lens: Vec<usize>,
    /// The baseline is abandoned after this many times the linear engine's
    /// median on the same query.
    pub baseline_budget: u32,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            relations: vec![RelationKind::Subsequence, RelationKind::Supersequence],
            m: 1 << 14,
            sigma: 8,
            w_lens: (20..=23).map(|k| 1 << k).collect(),
            repetitions: 9,
            seed: 0x5eed,
            baseline_w_lens: vec![1 << 22],
            baseline_budget: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub engine: &'static str,
    pub relation: RelationKind,
    pub m: usize,
    pub w_len: usize,
    pub ns: u128,
    /// Linear engines: transitions marked (subsequence) or deleted
    /// (supersequence). Baseline: symbols simulated before stopping.
    pub work: usize,
    /// Baseline only: the run hit its time budget, so `ns` is a lower bound.
    pub timed_out: bool,
}

/// Baseline time over linear time at one text length. When the baseline
/// timed out the ratio is a lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Speedup {
    pub relation: RelationKind,
    pub w_len: usize,
    pub ratio: f64,
    pub lower_bound: bool,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Log-log slope of linear-engine time against |w| per relation.
    pub slopes: Vec<(RelationKind, f64)>,
    pub speedups: Vec<Speedup>,
    /// Transitions of the automaton each linear engine actually runs on
    /// (the condensed downward closure for supersequence).
    pub engine_m: Vec<(RelationKind, usize)>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.engine, r.relation, r.m, r.w_len, r.ns, r.work
            );
        }
        out
    }

    /// Human-readable summary lines, prefixed with `#` so the output stays
    /// parseable as CSV after stripping comments.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for (rel, slope) in &self.slopes {
            let _ = writeln!(out, "# slope linear {rel}: {slope:.3}");
        }
        for s in &self.speedups {
            let bound = if s.lower_bound { ">=" } else { "=" };
            let _ = writeln!(
                out,
                "# speedup {} w_len={}: {bound}{:.1}x",
                s.relation, s.w_len, s.ratio
            );
        }
        out
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let var: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    cov / var
}

fn median(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// One prepared linear engine. Preprocessing is excluded from timings.
enum Prepared {
    Subsequence { nfa: ENfa, index: TransitionIndex },
    Supersequence(SupersequenceMatcher),
}

impl Prepared {
    fn new(relation: RelationKind, nfa: ENfa) -> Self {
        match relation {
            RelationKind::Subsequence => {
                let index = TransitionIndex::new(&nfa);
                Prepared::Subsequence { nfa, index }
            }
            RelationKind::Supersequence => Prepared::Supersequence(SupersequenceMatcher::new(&nfa)),
            _ => panic!("no linear engine for {relation}"),
        }
    }

    fn engine_m(&self) -> usize {
        match self {
            Prepared::Subsequence { nfa, .. } => nfa.num_transitions(),
            Prepared::Supersequence(m) => m.condensed().num_transitions(),
        }
    }

    /// (answer, work)
    fn run(&self, word: &[Symbol]) -> (bool, usize) {
        match self {
            Prepared::Subsequence { nfa, index } => {
                let (answer, stats) = match_subsequence_with_stats(nfa, index, word);
                (answer, stats.marks)
            }
            Prepared::Supersequence(m) => {
                let (answer, stats) = m.matches_with_stats(word);
                (answer, stats.deletions)
            }
        }
    }
}

fn instance(relation: RelationKind, config: &BenchConfig, rng: &mut ChaCha8Rng) -> ENfa {
    match relation {
        RelationKind::Subsequence => subsequence_bench_nfa(rng, config.m, config.sigma),
        RelationKind::Supersequence => supersequence_bench_nfa(rng, config.m, config.sigma),
        _ => panic!("no benchmark family for {relation}"),
    }
}

/// Text avoiding the symbol reserved for the final transitions of the
/// subsequence family; any symbol for supersequence.
fn text(relation: RelationKind, len: usize, sigma: u32, rng: &mut ChaCha8Rng) -> Vec<Symbol> {
    match relation {
        RelationKind::Subsequence => random_word(rng, len, sigma - 1),
        _ => random_word(rng, len, sigma),
    }
}

/// Run the configured measurements. Rows are grouped by relation, linear
/// engine first.
pub fn bench_scaling(config: &BenchConfig) -> BenchReport {
    let mut report = BenchReport {
        rows: Vec::new(),
        slopes: Vec::new(),
        speedups: Vec::new(),
        engine_m: Vec::new(),
    };
    for &relation in &config.relations {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let nfa = instance(relation, config, &mut rng);
        let prepared = Prepared::new(relation, nfa.clone());
        report.engine_m.push((relation, prepared.engine_m()));
        let longest = config
            .w_lens
            .iter()
            .chain(&config.baseline_w_lens)
            .copied()
            .max()
            .unwrap_or(0);
        let full_text = text(relation, longest, config.sigma, &mut rng);

        let mut lens: Vec<usize> = config
            .w_lens
            .iter()
            .chain(&config.baseline_w_lens)
            .copied()
            .collect();
        lens.sort_unstable();
        lens.dedup();
        // Repetitions are interleaved across lengths so that a burst of
        // background load does not skew a single length.
        let mut samples = vec![Vec::new(); lens.len()];
        let mut work = vec![0; lens.len()];
        for _ in 0..config.repetitions.max(1) {
            for (i, &len) in lens.iter().enumerate() {
                let start = Instant::now();
                let (answer, w) = prepared.run(&full_text[..len]);
                samples[i].push(start.elapsed().as_nanos());
                std::hint::black_box(answer);
                work[i] = w;
            }
        }
        let mut points = Vec::new();
        let mut linear_ns = Vec::new();
        for ((&len, samples), work) in lens.iter().zip(samples).zip(work) {
            let ns = median(samples);
            linear_ns.push((len, ns));
            if config.w_lens.contains(&len) {
                points.push((len as f64, ns as f64));
                report.rows.push(BenchRow {
                    engine: "linear",
                    relation,
                    m: nfa.num_transitions(),
                    w_len: len,
                    ns,
                    work,
                    timed_out: false,
                });
            }
        }
        if points.len() >= 2 {
            report.slopes.push((relation, loglog_slope(&points)));
        }

        if config.baseline_w_lens.is_empty() {
            continue;
        }
        let closure = match relation {
            RelationKind::Subsequence => upward_automaton(&nfa),
            _ => downward_automaton(&nfa),
        };
        let index = TransitionIndex::new(&closure);
        let mut sim = Simulator::new(&closure, &index);
        for &len in &config.baseline_w_lens {
            let word = &full_text[..len];
            let linear = linear_ns.iter().find(|p| p.0 == len).unwrap().1;
            let budget = Duration::from_nanos((linear * config.baseline_budget as u128) as u64);
            let start = Instant::now();
            let outcome = sim.accepts_before(word, start + budget);
            let ns = start.elapsed().as_nanos();
            let timed_out = outcome.is_none();
            if let Some(answer) = outcome {
                assert_eq!(
                    answer,
                    prepared.run(word).0,
                    "baseline disagrees with the linear engine"
                );
            }
            report.rows.push(BenchRow {
                engine: "baseline",
                relation,
                m: nfa.num_transitions(),
                w_len: len,
                ns,
                work: if timed_out { 0 } else { len },
                timed_out,
            });
            report.speedups.push(Speedup {
                relation,
                w_len: len,
                ratio: ns as f64 / linear.max(1) as f64,
                lower_bound: timed_out,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_power_law() {
        let pts: Vec<(f64, f64)> = (1..6)
            .map(|k| (2f64.powi(k), 3.0 * 2f64.powi(2 * k)))
            .collect();
        assert!((loglog_slope(&pts) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn small_run_produces_rows() {
        let config = BenchConfig {
            m: 256,
            w_lens: vec![1 << 10, 1 << 11],
            repetitions: 3,
            baseline_w_lens: vec![1 << 10],
            baseline_budget: 1000,
            ..BenchConfig::default()
        };
        let report = bench_scaling(&config);
        assert_eq!(report.rows.len(), 6);
        let csv = report.to_csv();
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), 7);
        for row in report.rows.iter().filter(|r| r.engine == "linear") {
            let m = report
                .engine_m
                .iter()
                .find(|e| e.0 == row.relation)
                .unwrap()
                .1;
            assert!(row.work <= m);
        }
    }
}
