//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relmatch::bench::{bench_scaling, BenchConfig};
use relmatch::closure::{condense, downward_automaton, upward_automaton};
use relmatch::linear::{match_subsequence, match_supersequence, SelfLoopRegistry, SelfLoops};
use relmatch::oracle::{
    all_strings, brute_match, brute_quantitative, brute_universal, enumerate_relation, lcs_scs_dp,
};
use relmatch::random::{random_ast, random_nfa, random_word};
use relmatch::regex::compile_thompson;
use relmatch::simulate::{accepts, simulate_membership};
use relmatch::universal::{universal_bounded, universal_infix, universal_prefix, CapExceeded};
use relmatch::{
    compile, match_relation, quantitative_match, ENfa, LengthAnswer, Mode, RelationKind, State,
    Symbol, TransitionIndex, DEFAULT_CAP,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Random instance: regex of at most 8 nodes over σ ≤ 3, text of length ≤ 6.
fn instance(rng: &mut ChaCha8Rng) -> (ENfa, Vec<Symbol>) {
    let sigma = rng.gen_range(1..=3);
    let nfa = compile_thompson(&random_ast(rng, 8, sigma), sigma).trim();
    let len = rng.gen_range(0..=6);
    (nfa, random_word(rng, len, sigma))
}

fn brute_boolean(nfa: &ENfa, word: &[Symbol], rel: RelationKind) -> bool {
    if rel.is_finite() {
        let index = TransitionIndex::new(nfa);
        enumerate_relation(word, rel, None, nfa.sigma())
            .unwrap()
            .iter()
            .any(|u| simulate_membership(nfa, &index, u))
    } else {
        brute_match(nfa, word, rel)
    }
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let start = Instant::now();
    let mut mismatches = 0;
    for _ in 0..5000 {
        let (nfa, word) = instance(&mut rng);
        for rel in RelationKind::ALL {
            if match_relation(&nfa, &word, rel) != brute_boolean(&nfa, &word, rel) {
                mismatches += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 60.0,
        format!("5000 instances x 6 relations, {mismatches} mismatches, {secs:.1}s (limit 60s)"),
    )
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let start = Instant::now();
    let (mut mismatches, mut bad_witnesses, mut unbounded, mut finite) = (0, 0, 0, 0);
    for _ in 0..2000 {
        let (nfa, word) = instance(&mut rng);
        for rel in RelationKind::ALL {
            for mode in [Mode::Min, Mode::Max] {
                let got = quantitative_match(&nfa, &word, rel, mode);
                let expected = brute_quantitative(&nfa, &word, rel, mode);
                let same_kind = std::mem::discriminant(&got) == std::mem::discriminant(&expected);
                if !same_kind || got.length() != expected.length() {
                    mismatches += 1;
                }
                match &got {
                    LengthAnswer::Finite { witness, .. } => {
                        finite += 1;
                        if !rel.holds(witness, &word) || !accepts(&nfa, witness) {
                            bad_witnesses += 1;
                        }
                    }
                    LengthAnswer::Unbounded => unbounded += 1,
                    LengthAnswer::NoMatch => {}
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && bad_witnesses == 0 && secs < 120.0,
        format!(
            "2000 instances x 6 relations x min/max, {mismatches} mismatches, {bad_witnesses} invalid of {finite} witnesses, {unbounded} unbounded answers, {secs:.1}s (limit 120s)"
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut mismatches = 0;
    for _ in 0..2000 {
        let sigma = rng.gen_range(1..=3);
        let nfa = compile_thompson(&random_ast(&mut rng, 8, sigma), sigma).trim();
        let len = rng.gen_range(0..=8);
        let word = random_word(&mut rng, len, sigma);
        let index = TransitionIndex::new(&nfa);
        if match_subsequence(&nfa, &index, &word) != accepts(&upward_automaton(&nfa), &word) {
            mismatches += 1;
        }
        if match_supersequence(&nfa, &word) != accepts(&downward_automaton(&nfa), &word) {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("2000 instances x 2 closures, {mismatches} mismatches"),
    )
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let words = all_strings(2, 5);
    let mut mismatches = 0;
    let mut nontrivial = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(1..=16);
        let sigma = rng.gen_range(1..=2);
        let nfa = random_nfa(&mut rng, n, m, sigma).trim();
        let down = downward_automaton(&nfa);
        let cond = condense(&down).condensed;
        if cond.num_states() < down.num_states() {
            nontrivial += 1;
        }
        for w in words.iter().filter(|w| w.iter().all(|&a| a <= sigma)) {
            if accepts(&down, w) != accepts(&cond, w) {
                mismatches += 1;
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("200 automata, all strings up to length 5, {nontrivial} with merged components, {mismatches} mismatches"),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut failures = 0;
    for _ in 0..200 {
        let (lu, lv) = (rng.gen_range(0..=40), rng.gen_range(0..=40));
        let u = random_word(&mut rng, lu, 4);
        let v = random_word(&mut rng, lv, 4);
        let chain = ENfa::word(&u, 4);
        // longest subsequence of v accepted by the subsequences of u
        let p = quantitative_match(
            &downward_automaton(&chain),
            &v,
            RelationKind::Subsequence,
            Mode::Max,
        );
        // shortest supersequence of v accepted by the supersequences of u
        let q = quantitative_match(
            &upward_automaton(&chain),
            &v,
            RelationKind::Supersequence,
            Mode::Min,
        );
        let (lcs, scs) = lcs_scs_dp(&u, &v);
        let ok = matches!((p.length(), q.length()), (Some(p), Some(q)) if p == lcs && q == scs && p == u.len() + v.len() - q);
        if !ok {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("200 pairs up to length 40, {failures} failures"),
    )
}

fn criterion_6() -> Outcome {
    let config = BenchConfig::default();
    let start = Instant::now();
    let report = bench_scaling(&config);
    let secs = start.elapsed().as_secs_f64();
    let mut passed = true;
    let mut parts = Vec::new();
    for (rel, slope) in &report.slopes {
        let ok = (slope - 1.0).abs() <= 0.15;
        passed &= ok;
        parts.push(format!("{rel} slope {slope:.3}"));
    }
    passed &= report.slopes.len() == 2;
    for row in report.rows.iter().filter(|r| r.engine == "linear") {
        let engine_m = report
            .engine_m
            .iter()
            .find(|e| e.0 == row.relation)
            .unwrap()
            .1;
        if row.work > engine_m {
            passed = false;
            parts.push(format!(
                "{} work {} exceeds m {engine_m}",
                row.relation, row.work
            ));
        }
    }
    for s in &report.speedups {
        passed &= s.ratio >= 20.0;
        let bound = if s.lower_bound { ">=" } else { "" };
        parts.push(format!(
            "{} speedup {bound}{:.1}x at |w|=2^{}",
            s.relation,
            s.ratio,
            s.w_len.trailing_zeros()
        ));
    }
    passed &= report.speedups.len() == 2;
    parts.push(format!("m=2^{}, {secs:.0}s", config.m.trailing_zeros()));
    outcome(passed, parts.join(", "))
}

/// Regex, text, relation, expected universal answer.
const HAND_INSTANCES: &[(&str, &str, RelationKind, bool)] = &[
    ("(a|b)*", "ab", RelationKind::Supersequence, true),
    ("(a|b)*a(a|b)*", "a", RelationKind::Supersequence, true),
    ("a(a|b)*", "a", RelationKind::Supersequence, false),
    ("(a|b)*b(a|b)*", "ab", RelationKind::Supersequence, true),
    ("(a|b)*ab(a|b)*", "ab", RelationKind::Extension, true),
    ("(a|b)*ab", "ab", RelationKind::Extension, false),
    ("(a|b)*ab", "ab", RelationKind::LeftExtension, true),
    ("(a|b)*b", "ab", RelationKind::LeftExtension, true),
    ("a*ab", "ab", RelationKind::LeftExtension, false),
    ("(a|b)*(aa|bb)(a|b)*", "aa", RelationKind::Extension, true),
    ("((a|b)(a|b))*", "ab", RelationKind::LeftExtension, false),
    ("(a|b)*", "", RelationKind::Extension, true),
];

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut failures = Vec::new();

    let mut efficient = 0;
    for _ in 0..2000 {
        let (nfa, word) = instance(&mut rng);
        let index = TransitionIndex::new(&nfa);
        for (rel, got) in [
            (RelationKind::Prefix, universal_prefix(&nfa, &index, &word)),
            (RelationKind::Infix, universal_infix(&nfa, &index, &word)),
        ] {
            let expected = enumerate_relation(&word, rel, None, nfa.sigma())
                .unwrap()
                .iter()
                .all(|u| simulate_membership(&nfa, &index, u));
            if got != expected {
                efficient += 1;
            }
        }
    }
    if efficient > 0 {
        failures.push(format!("{efficient} prefix/infix mismatches"));
    }

    let mut subsequence = 0;
    for _ in 0..300 {
        let sigma = rng.gen_range(1..=3);
        // bias towards large languages so that many answers are true
        let ast = relmatch::RegexAst::alt(
            relmatch::RegexAst::star(random_ast(&mut rng, 4, sigma)),
            random_ast(&mut rng, 6, sigma),
        );
        let nfa = compile_thompson(&ast, sigma).trim();
        let len = rng.gen_range(0..=12);
        let word = random_word(&mut rng, len, sigma);
        let index = TransitionIndex::new(&nfa);
        let expected = enumerate_relation(&word, RelationKind::Subsequence, None, sigma)
            .unwrap()
            .iter()
            .all(|u| simulate_membership(&nfa, &index, u));
        if universal_bounded(&nfa, &word, RelationKind::Subsequence, DEFAULT_CAP) != Ok(expected) {
            subsequence += 1;
        }
    }
    if subsequence > 0 {
        failures.push(format!("{subsequence} subsequence mismatches"));
    }

    let mut hard = 0;
    let mut hard_true = 0;
    let mut hard_total = 0;
    for &(pattern, text, rel, expected) in HAND_INSTANCES {
        let (nfa, mut table) = compile(pattern).unwrap();
        let word = table.encode(text);
        hard_total += 1;
        let got = universal_bounded(&nfa, &word, rel, 10_000);
        if got != Ok(expected) || brute_universal(&nfa, &word, rel) != expected {
            hard += 1;
        }
    }
    for _ in 0..50 {
        let sigma = rng.gen_range(1..=2);
        let ast = relmatch::RegexAst::alt(
            relmatch::RegexAst::star(random_ast(&mut rng, 4, sigma)),
            random_ast(&mut rng, 6, sigma),
        );
        let nfa = compile_thompson(&ast, sigma).trim();
        let len = rng.gen_range(0..=3);
        let word = random_word(&mut rng, len, sigma);
        for rel in [
            RelationKind::Supersequence,
            RelationKind::Extension,
            RelationKind::LeftExtension,
        ] {
            hard_total += 1;
            let expected = brute_universal(&nfa, &word, rel);
            hard_true += usize::from(expected);
            if universal_bounded(&nfa, &word, rel, 10_000) != Ok(expected) {
                hard += 1;
            }
        }
    }
    if hard > 0 {
        failures.push(format!("{hard} supersequence/extension mismatches"));
    }

    // universal over {a,b}, but the subset construction has about 2^(k+1) states
    let k = 12;
    let ab = "(a|b)";
    let pattern = format!(
        "({ab}*a{}|{ab}*b{}|{})",
        ab.repeat(k),
        ab.repeat(k),
        "(a|b|\\e)".repeat(k)
    );
    let over_cap = match Command::new(env!("CARGO_BIN_EXE_relmatch"))
        .args([
            "universal",
            "--regex",
            &pattern,
            "--relation",
            "supersequence",
            "--text",
            "a",
            "--cap",
            "1000",
        ])
        .output()
    {
        Ok(out) => out.status.code() == Some(3) && out.stdout == b"cap-exceeded\n",
        Err(_) => false,
    };
    let (nfa, mut table) = compile(&pattern).unwrap();
    let word = table.encode("a");
    let lib_cap = universal_bounded(&nfa, &word, RelationKind::Supersequence, 1000);
    let full = universal_bounded(&nfa, &word, RelationKind::Supersequence, DEFAULT_CAP);
    if !over_cap || lib_cap != Err(CapExceeded { cap: 1000 }) {
        failures.push("over-cap instance did not report cap-exceeded with exit 3".into());
    }
    if full != Ok(true) {
        failures.push(format!(
            "over-cap instance under the default cap gave {full:?}"
        ));
    }

    let detail = format!(
        "2000 prefix/infix instances, 300 subsequence instances up to |w|=12, {hard_total} supersequence/extension instances ({hard_true} universal), over-cap instance exit 3 at cap 1000 and true at default cap"
    );
    if failures.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail}; {}", failures.join("; ")))
    }
}

struct LoopTable(HashSet<(State, Symbol)>);

impl SelfLoops for LoopTable {
    fn has_self_loop(&self, q: State, a: Symbol) -> bool {
        self.0.contains(&(q, a))
    }
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let (n, sigma, ops) = (6000usize, 4u32, 10_000usize);
    let loops = LoopTable(
        (0..n as State)
            .flat_map(|q| (1..=sigma).map(move |a| (q, a)))
            .filter(|_| rng.gen_bool(0.4))
            .collect(),
    );
    let mut registry = SelfLoopRegistry::new(n, sigma);
    let mut naive: Vec<State> = Vec::new();
    let mut fresh: Vec<State> = (0..n as State).collect();
    let mut mismatches = 0;
    let mut out = Vec::new();
    for _ in 0..ops {
        if !fresh.is_empty() && rng.gen_bool(0.6) {
            let q = fresh.swap_remove(rng.gen_range(0..fresh.len()));
            registry.push(q);
            naive.push(q);
        } else {
            let a = rng.gen_range(1..=sigma);
            out.clear();
            registry.pop(a, &loops, &mut out);
            let mut expected: Vec<State> = naive
                .iter()
                .copied()
                .filter(|&q| !loops.has_self_loop(q, a))
                .collect();
            naive.retain(|&q| loops.has_self_loop(q, a));
            let mut got = out.clone();
            got.sort_unstable();
            expected.sort_unstable();
            if got != expected {
                mismatches += 1;
            }
        }
    }
    if registry.states() != naive {
        mismatches += 1;
    }
    let cost = registry.stats().cost();
    let c = cost as f64 / (ops + loops.0.len()) as f64;
    outcome(
        mismatches == 0 && c <= 4.0,
        format!("{ops} operations, {mismatches} mismatches, cost {cost} = {c:.2} x (ops + self-loops), limit 4"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("Boolean matching equals brute force", criterion_1),
        (
            "min/max lengths equal brute force, witnesses valid",
            criterion_2,
        ),
        (
            "linear matchers equal closure-automaton simulation",
            criterion_3,
        ),
        (
            "condensation preserves the downward-closure language",
            criterion_4,
        ),
        ("LCS/SCS through quantitative matching", criterion_5),
        ("linear-time scaling and speedup", criterion_6),
        ("universal variants", criterion_7),
        ("self-loop registry", criterion_8),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    let total = Instant::now();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("criterion {}", i + 1);
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| id.contains(f.as_str()) || name.contains(f.as_str()))
        {
            continue;
        }
        let result = run();
        let status = if result.passed { "PASS" } else { "FAIL" };
        println!("{status} {id}: {name}: {}", result.detail);
        failed += usize::from(!result.passed);
    }
    println!(
        "acceptance: {failed} failed, {:.1}s total",
        total.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
