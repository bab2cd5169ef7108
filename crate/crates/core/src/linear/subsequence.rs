use crate::automaton::{ENfa, State, Symbol, TransitionIndex, EPSILON};

/// Work counters for one subsequence query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SubsequenceStats {
    /// Transitions marked as explored. Never exceeds m.
    pub marks: usize,
    /// Transitions appended to the pending lists. Never exceeds m.
    pub pending_insertions: usize,
    /// Symbols of the input consumed before answering.
    pub symbols_read: usize,
}

/// Incremental simulation of the upward-closure automaton without building it.
///
/// The active set only grows. `pending[a]` holds the unmarked `a`-transitions
/// leaving active states; reading `a` drains that list, so each transition is
/// looked at a constant number of times over the whole input.
#[derive(Debug, Clone)]
pub struct SubsequenceRun<'a> {
    nfa: &'a ENfa,
    index: &'a TransitionIndex,
    active: Vec<bool>,
    active_count: usize,
    marked: Vec<bool>,
    pending: Vec<Vec<u32>>,
    fresh: Vec<State>,
    stats: SubsequenceStats,
}

impl<'a> SubsequenceRun<'a> {
    /// Starts at `S_0`, the ε-closure of the initial state.
    pub fn new(nfa: &'a ENfa, index: &'a TransitionIndex) -> Self {
        let mut run = SubsequenceRun {
            nfa,
            index,
            active: vec![false; nfa.num_states()],
            active_count: 0,
            marked: vec![false; index.edges().len()],
            pending: vec![Vec::new(); nfa.sigma() as usize + 1],
            fresh: Vec::new(),
            stats: SubsequenceStats::default(),
        };
        run.activate(nfa.initial());
        run.settle();
        run
    }

    #[inline]
    fn activate(&mut self, q: State) {
        if !self.active[q as usize] {
            self.active[q as usize] = true;
            self.active_count += 1;
            self.fresh.push(q);
        }
    }

    /// ε-close the fresh states over unmarked ε-transitions, then queue the
    /// symbol transitions of everything that became active.
    fn settle(&mut self) {
        let index = self.index;
        let mut head = 0;
        while head < self.fresh.len() {
            let q = self.fresh[head];
            head += 1;
            for id in index.labelled_range(q, EPSILON) {
                if !self.marked[id] {
                    self.marked[id] = true;
                    self.stats.marks += 1;
                    self.activate(index.edges()[id].dst);
                }
            }
        }
        for &r in &self.fresh {
            for id in index.outgoing_range(r) {
                let label = index.edges()[id].label;
                if label != EPSILON {
                    self.pending[label as usize].push(id as u32);
                    self.stats.pending_insertions += 1;
                }
            }
        }
        self.fresh.clear();
    }

    /// Read one symbol of the text.
    pub fn advance(&mut self, a: Symbol) {
        self.stats.symbols_read += 1;
        if a == EPSILON || a > self.nfa.sigma() {
            return;
        }
        let mut drained = std::mem::take(&mut self.pending[a as usize]);
        for &id in &drained {
            self.marked[id as usize] = true;
            self.stats.marks += 1;
            self.activate(self.index.edges()[id as usize].dst);
        }
        drained.clear();
        self.pending[a as usize] = drained;
        self.settle();
    }

    #[inline]
    pub fn is_active(&self, q: State) -> bool {
        self.active[q as usize]
    }

    #[inline]
    pub fn active_count(&self) -> usize {
        self.active_count
    }

    #[inline]
    pub fn accepting(&self) -> bool {
        self.active[self.nfa.final_state() as usize]
    }

    pub fn active_states(&self) -> Vec<State> {
        (0..self.active.len() as State)
            .filter(|&q| self.active[q as usize])
            .collect()
    }

    pub fn stats(&self) -> SubsequenceStats {
        self.stats
    }
}

/// Does some subsequence of `word` (ε and `word` included) belong to `L(nfa)`?
/// Runs in O(|word| + m) and stops as soon as the final state becomes active.
pub fn match_subsequence(nfa: &ENfa, index: &TransitionIndex, word: &[Symbol]) -> bool {
    match_subsequence_with_stats(nfa, index, word).0
}

pub fn match_subsequence_with_stats(
    nfa: &ENfa,
    index: &TransitionIndex,
    word: &[Symbol],
) -> (bool, SubsequenceStats) {
    let mut run = SubsequenceRun::new(nfa, index);
    for &a in word {
        if run.accepting() {
            break;
        }
        run.advance(a);
    }
    let stats = run.stats();
    debug_assert!(stats.marks <= nfa.num_transitions());
    debug_assert!(stats.pending_insertions <= nfa.num_transitions());
    (run.accepting(), stats)
}
