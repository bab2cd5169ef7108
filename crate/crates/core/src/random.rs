//! Seeded generators for test instances and benchmark families.

use rand::Rng;

use crate::automaton::{ENfa, State, Symbol, Transition, EPSILON};
use crate::regex::RegexAst;

/// Random regex with at most `max_nodes` nodes (at least one) over `1..=sigma`.
/// Leaves are mostly literals, sometimes ε, rarely ∅.
pub fn random_ast<R: Rng + ?Sized>(rng: &mut R, max_nodes: usize, sigma: u32) -> RegexAst {
    let budget = rng.gen_range(1..=max_nodes.max(1));
    build_ast(rng, budget, sigma)
}

fn build_ast<R: Rng + ?Sized>(rng: &mut R, budget: usize, sigma: u32) -> RegexAst {
    if budget <= 1 {
        return match rng.gen_range(0..20) {
            0 => RegexAst::EmptySet,
            1..=3 => RegexAst::Epsilon,
            _ => RegexAst::Literal(rng.gen_range(1..=sigma)),
        };
    }
    if budget == 2 || rng.gen_bool(0.25) {
        return RegexAst::star(build_ast(rng, budget - 1, sigma));
    }
    let left = rng.gen_range(1..budget - 1);
    let (l, r) = (
        build_ast(rng, left, sigma),
        build_ast(rng, budget - 1 - left, sigma),
    );
    if rng.gen_bool(0.5) {
        RegexAst::concat(l, r)
    } else {
        RegexAst::alt(l, r)
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize, sigma: u32) -> Vec<Symbol> {
    (0..len).map(|_| rng.gen_range(1..=sigma)).collect()
}

/// Arbitrary ε-NFA with `n ≥ 2` states and `m` uniformly random transitions,
/// a quarter of them ε. Not necessarily trim.
pub fn random_nfa<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, sigma: u32) -> ENfa {
    let transitions = (0..m)
        .map(|_| {
            let label = if rng.gen_bool(0.25) {
                EPSILON
            } else {
                rng.gen_range(1..=sigma)
            };
            Transition::new(
                rng.gen_range(0..n as State),
                label,
                rng.gen_range(0..n as State),
            )
        })
        .collect();
    ENfa::new(n, sigma, 0, rng.gen_range(0..n as State), transitions)
}

/// Trim automaton with about `m` transitions for timing the subsequence
/// matcher: a chain from the initial state plus random extra transitions.
/// Only transitions into the final state use symbol `sigma`, so a text over
/// `1..sigma` never reaches it and the whole text is scanned.
pub fn subsequence_bench_nfa<R: Rng + ?Sized>(rng: &mut R, m: usize, sigma: u32) -> ENfa {
    assert!(sigma >= 2);
    let n = (m / 4).max(2);
    let qf = (n - 1) as State;
    let mut transitions: Vec<Transition> = (0..qf - 1)
        .map(|q| Transition::new(q, rng.gen_range(1..sigma), q + 1))
        .collect();
    transitions.push(Transition::new(qf - 1, sigma, qf));
    while transitions.len() < m {
        let src = rng.gen_range(0..qf);
        let dst = rng.gen_range(0..qf);
        let label = if rng.gen_bool(0.2) {
            EPSILON
        } else {
            rng.gen_range(1..sigma)
        };
        transitions.push(Transition::new(src, label, dst));
    }
    ENfa::new(n, sigma, 0, qf, transitions)
}

/// Trim automaton with exactly `m` transitions for timing the supersequence
/// matcher: a chain of strongly connected blocks of `2σ` states joined by
/// forward transitions. Half of the blocks have cycles using every symbol, so
/// their condensed states survive any text while the uncondensed simulation
/// keeps carrying all of their states; the other half die off as the text
/// proceeds. The final state loops on every symbol.
pub fn supersequence_bench_nfa<R: Rng + ?Sized>(rng: &mut R, m: usize, sigma: u32) -> ENfa {
    let block = 2 * sigma as usize;
    // cycle edges plus the chain edge, with room left for forward edges
    let blocks = (m / (block + 3)).max(1);
    let n = blocks * block + 1;
    let qf = (n - 1) as State;
    let mut transitions = Vec::with_capacity(m);
    for b in 0..blocks {
        let base = (b * block) as State;
        let full = rng.gen_bool(0.5);
        for i in 0..block as State {
            let label = if full {
                i % sigma + 1
            } else {
                rng.gen_range(1..=sigma)
            };
            let next = base + (i + 1) % block as State;
            transitions.push(Transition::new(base + i, label, next));
        }
        let exit = base + rng.gen_range(0..block as State);
        let entry = if b + 1 == blocks {
            qf
        } else {
            base + block as State
        };
        transitions.push(Transition::new(exit, rng.gen_range(1..=sigma), entry));
    }
    transitions.extend((1..=sigma).map(|a| Transition::new(qf, a, qf)));
    while transitions.len() < m {
        let src = rng.gen_range(0..qf);
        let dst = rng.gen_range(src + 1..=qf);
        transitions.push(Transition::new(src, rng.gen_range(1..=sigma), dst));
    }
    transitions.truncate(m.max(blocks * (block + 1) + sigma as usize));
    ENfa::new(n, sigma, 0, qf, transitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ast_budget_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let ast = random_ast(&mut rng, 8, 3);
            assert!(ast.size() <= 8);
            assert!(ast.max_symbol() <= 3);
        }
    }

    #[test]
    fn bench_automata_are_trim() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for m in [64, 1000] {
            let a = subsequence_bench_nfa(&mut rng, m, 4);
            assert_eq!(a.trim().num_states(), a.num_states());
            assert_eq!(a.num_transitions(), m);
            let b = supersequence_bench_nfa(&mut rng, m, 4);
            assert_eq!(b.trim().num_states(), b.num_states());
            assert_eq!(b.num_transitions(), m);
        }
    }
}
