use std::collections::VecDeque;

use crate::automaton::{ENfa, State, Symbol, TransitionIndex};
use crate::closure::{condense, downward_automaton, Condensation};

use super::registry::{RegistryStats, SelfLoopRegistry};

/// Work counters for one supersequence query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SupersequenceStats {
    /// Condensed transitions logically deleted. Never exceeds m'.
    pub deletions: usize,
    /// Condensed states removed from the active set.
    pub removed_states: usize,
    pub registry: RegistryStats,
    pub symbols_read: usize,
}

/// Preprocessed automaton for supersequence queries: the condensation of the
/// downward-closure automaton plus its in-degrees and roots.
///
/// Construction is O(m). Queries share it read-only.
#[derive(Debug, Clone)]
pub struct SupersequenceMatcher {
    condensation: Condensation,
    index: TransitionIndex,
    initial_indeg: Vec<u32>,
    roots: Vec<State>,
    empty: bool,
}

impl SupersequenceMatcher {
    /// The automaton is trimmed first; the active-set argument needs every
    /// state reachable from the initial state.
    pub fn new(nfa: &ENfa) -> Self {
        let trimmed = nfa.trim();
        let empty = trimmed.is_trivially_empty();
        let condensation = condense(&downward_automaton(&trimmed));
        let condensed = &condensation.condensed;
        let index = TransitionIndex::new(condensed);
        let mut initial_indeg = vec![0u32; condensed.num_states()];
        for t in condensed.transitions() {
            if t.src != t.dst {
                initial_indeg[t.dst as usize] += 1;
            }
        }
        let roots = (0..condensed.num_states() as State)
            .filter(|&q| initial_indeg[q as usize] == 0)
            .collect();
        SupersequenceMatcher {
            condensation,
            index,
            initial_indeg,
            roots,
            empty,
        }
    }

    pub fn condensation(&self) -> &Condensation {
        &self.condensation
    }

    pub fn condensed(&self) -> &ENfa {
        &self.condensation.condensed
    }

    pub fn index(&self) -> &TransitionIndex {
        &self.index
    }

    /// Fresh run positioned at `S_0` (all condensed states).
    pub fn run(&self) -> SupersequenceRun<'_> {
        SupersequenceRun::new(self)
    }

    /// Does some supersequence of `word` belong to the language? O(|word| + m).
    pub fn matches(&self, word: &[Symbol]) -> bool {
        self.matches_with_stats(word).0
    }

    pub fn matches_with_stats(&self, word: &[Symbol]) -> (bool, SupersequenceStats) {
        if self.empty {
            return (false, SupersequenceStats::default());
        }
        let mut run = self.run();
        for &a in word {
            if !run.accepting() {
                break;
            }
            run.advance(a);
        }
        let stats = run.stats();
        debug_assert!(stats.deletions <= self.condensed().num_transitions());
        debug_assert!(stats.registry.pushes <= self.condensed().num_states());
        (run.accepting(), stats)
    }
}

/// Stepwise shrinking state-set simulation of the condensed automaton.
///
/// States are never physically removed: `alive`, `indeg` and the step stamps
/// in `kept_at` carry the deletions.
#[derive(Debug, Clone)]
pub struct SupersequenceRun<'a> {
    matcher: &'a SupersequenceMatcher,
    alive: Vec<bool>,
    alive_count: usize,
    indeg: Vec<u32>,
    kept_at: Vec<u32>,
    registry: SelfLoopRegistry,
    doomed: VecDeque<State>,
    popped: Vec<State>,
    step: u32,
    stats: SupersequenceStats,
}

impl<'a> SupersequenceRun<'a> {
    fn new(matcher: &'a SupersequenceMatcher) -> Self {
        let condensed = matcher.condensed();
        let n = condensed.num_states();
        let mut registry = SelfLoopRegistry::new(n, condensed.sigma());
        for &r in &matcher.roots {
            registry.push(r);
        }
        SupersequenceRun {
            matcher,
            alive: vec![!matcher.empty; n],
            alive_count: if matcher.empty { 0 } else { n },
            indeg: matcher.initial_indeg.clone(),
            kept_at: vec![0; n],
            registry,
            doomed: VecDeque::new(),
            popped: Vec::new(),
            step: 0,
            stats: SupersequenceStats::default(),
        }
    }

    /// Read one symbol: delete every active state not reachable by an
    /// `a`-labelled path from another active state.
    pub fn advance(&mut self, a: Symbol) {
        self.step += 1;
        self.stats.symbols_read += 1;
        let step = self.step;
        let index = &self.matcher.index;

        self.popped.clear();
        self.registry.pop(a, index, &mut self.popped);
        self.doomed.extend(self.popped.iter().copied());

        while let Some(q) = self.doomed.pop_front() {
            self.alive[q as usize] = false;
            self.alive_count -= 1;
            self.stats.removed_states += 1;
            for t in index.outgoing(q) {
                if t.dst == q {
                    continue;
                }
                self.stats.deletions += 1;
                let d = t.dst as usize;
                self.indeg[d] -= 1;
                if t.label == a || index.has_self_loop(t.dst, a) {
                    self.kept_at[d] = step;
                }
                if self.indeg[d] == 0 {
                    if self.kept_at[d] == step {
                        self.registry.push(t.dst);
                    } else {
                        self.doomed.push_back(t.dst);
                    }
                }
            }
        }
    }

    #[inline]
    pub fn is_alive(&self, q: State) -> bool {
        self.alive[q as usize]
    }

    #[inline]
    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn alive_states(&self) -> Vec<State> {
        (0..self.alive.len() as State)
            .filter(|&q| self.alive[q as usize])
            .collect()
    }

    #[inline]
    pub fn accepting(&self) -> bool {
        self.alive[self.matcher.condensed().final_state() as usize]
    }

    /// In-degree bookkeeping: for every live state, the number of non-loop
    /// transitions from live states.
    pub fn live_indegree(&self, q: State) -> u32 {
        self.indeg[q as usize]
    }

    pub fn registry_states(&self) -> Vec<State> {
        self.registry.states()
    }

    pub fn stats(&self) -> SupersequenceStats {
        SupersequenceStats {
            registry: self.registry.stats(),
            ..self.stats
        }
    }
}

/// One-shot convenience: builds the matcher and answers a single query.
pub fn match_supersequence(nfa: &ENfa, word: &[Symbol]) -> bool {
    SupersequenceMatcher::new(nfa).matches(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::compile;

    fn check(pattern: &str, text: &str) -> bool {
        let (nfa, mut table) = compile(pattern).unwrap();
        match_supersequence(&nfa, &table.encode(text))
    }

    #[test]
    fn order_matters() {
        assert!(check("aab", "ab"));
        assert!(!check("aab", "ba"));
    }

    #[test]
    fn text_itself_in_language() {
        assert!(check("a*", "aaaa"));
    }

    #[test]
    fn empty_text_needs_nonempty_language() {
        assert!(check("abc", ""));
        assert!(!check(r"\0", ""));
        assert!(!check(r"\0", "a"));
    }

    #[test]
    fn foreign_symbol_rejects() {
        assert!(!check("a*b*", "abz"));
    }

    #[test]
    fn too_many_occurrences_reject() {
        assert!(!check("a", "aa"));
        assert!(check("(ab)*", "aaa"));
    }

    #[test]
    fn invariants_hold_after_each_step() {
        let (nfa, mut table) = compile("(ab|c)*a(b|cd)*").unwrap();
        let matcher = SupersequenceMatcher::new(&nfa);
        let condensed = matcher.condensed();
        let mut run = matcher.run();
        for a in table.encode("acbdcab") {
            run.advance(a);
            for q in run.alive_states() {
                let live_in = condensed
                    .transitions()
                    .iter()
                    .filter(|t| t.dst == q && t.src != q && run.is_alive(t.src))
                    .count() as u32;
                assert_eq!(run.live_indegree(q), live_in);
            }
            let mut roots: Vec<State> = run
                .alive_states()
                .into_iter()
                .filter(|&q| run.live_indegree(q) == 0)
                .collect();
            let mut stored = run.registry_states();
            roots.sort_unstable();
            stored.sort_unstable();
            assert_eq!(roots, stored);
        }
    }
}
