//! Classic state-set simulation, O(|w| m).
//!
//! This is the reference matcher: the closure automata are checked with it,
//! and the benchmark uses it as the quadratic baseline.

use std::time::Instant;

use crate::automaton::{ENfa, State, Symbol, TransitionIndex, EPSILON};

/// Set of states with O(1) membership, O(1) clear and a member list.
#[derive(Debug, Clone)]
pub struct StateSet {
    stamp: Vec<u32>,
    epoch: u32,
    members: Vec<State>,
}

impl StateSet {
    pub fn new(num_states: usize) -> Self {
        StateSet {
            stamp: vec![0; num_states],
            epoch: 1,
            members: Vec::new(),
        }
    }

    #[inline]
    pub fn contains(&self, q: State) -> bool {
        self.stamp[q as usize] == self.epoch
    }

    /// Returns false if `q` was already present.
    #[inline]
    pub fn insert(&mut self, q: State) -> bool {
        if self.contains(q) {
            return false;
        }
        self.stamp[q as usize] = self.epoch;
        self.members.push(q);
        true
    }

    pub fn clear(&mut self) {
        self.members.clear();
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    #[inline]
    pub fn members(&self) -> &[State] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in increasing order.
    pub fn to_sorted_vec(&self) -> Vec<State> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }
}

/// Extend `set` in place to its ε-closure (breadth-first over `T[q, ε]`).
pub fn eps_closure(index: &TransitionIndex, set: &mut StateSet) {
    let mut head = 0;
    while head < set.members.len() {
        let q = set.members[head];
        head += 1;
        for t in index.labelled(q, EPSILON) {
            set.insert(t.dst);
        }
    }
}

/// Replace `next` with the ε-closure of the `a`-successors of `current`.
pub fn step(index: &TransitionIndex, current: &StateSet, a: Symbol, next: &mut StateSet) {
    next.clear();
    for &q in current.members() {
        for t in index.labelled(q, a) {
            next.insert(t.dst);
        }
    }
    eps_closure(index, next);
}

/// Reusable simulation over one automaton.
#[derive(Debug, Clone)]
pub struct Simulator<'a> {
    nfa: &'a ENfa,
    index: &'a TransitionIndex,
    current: StateSet,
    next: StateSet,
}

impl<'a> Simulator<'a> {
    pub fn new(nfa: &'a ENfa, index: &'a TransitionIndex) -> Self {
        Simulator {
            nfa,
            index,
            current: StateSet::new(nfa.num_states()),
            next: StateSet::new(nfa.num_states()),
        }
    }

    /// Reset to `S_0 = CC_ε({q0})`.
    pub fn start(&mut self) {
        self.current.clear();
        self.current.insert(self.nfa.initial());
        eps_closure(self.index, &mut self.current);
    }

    pub fn advance(&mut self, a: Symbol) {
        step(self.index, &self.current, a, &mut self.next);
        std::mem::swap(&mut self.current, &mut self.next);
    }

    #[inline]
    pub fn active(&self) -> &StateSet {
        &self.current
    }

    #[inline]
    pub fn accepting(&self) -> bool {
        self.current.contains(self.nfa.final_state())
    }

    pub fn accepts(&mut self, word: &[Symbol]) -> bool {
        self.start();
        for &a in word {
            self.advance(a);
        }
        self.accepting()
    }

    /// Like [`Simulator::accepts`] but gives up once `deadline` has passed,
    /// checking the clock every 64 symbols.
    pub fn accepts_before(&mut self, word: &[Symbol], deadline: Instant) -> Option<bool> {
        self.start();
        for (i, &a) in word.iter().enumerate() {
            if i % 64 == 0 && Instant::now() >= deadline {
                return None;
            }
            self.advance(a);
        }
        Some(self.accepting())
    }
}

/// Decide `word ∈ L(nfa)`.
pub fn simulate_membership(nfa: &ENfa, index: &TransitionIndex, word: &[Symbol]) -> bool {
    Simulator::new(nfa, index).accepts(word)
}

/// All active sets `S_0, …, S_|w|`, each sorted.
pub fn simulate_trace(nfa: &ENfa, index: &TransitionIndex, word: &[Symbol]) -> Vec<Vec<State>> {
    let mut sim = Simulator::new(nfa, index);
    sim.start();
    let mut trace = Vec::with_capacity(word.len() + 1);
    trace.push(sim.active().to_sorted_vec());
    for &a in word {
        sim.advance(a);
        trace.push(sim.active().to_sorted_vec());
    }
    trace
}

/// Convenience wrapper that builds the index.
pub fn accepts(nfa: &ENfa, word: &[Symbol]) -> bool {
    simulate_membership(nfa, &TransitionIndex::new(nfa), word)
}
