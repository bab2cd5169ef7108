//! ε-NFA representation, trimming, the transition index and the text format.
//!
//! States are dense `0..n` internally; the text format numbers them `1..n`.
//! Symbols are integers `1..=sigma` and label `0` is ε.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lazy::LazyArray;

pub type State = u32;
pub type Symbol = u32;

/// Label of ε-transitions.
pub const EPSILON: Symbol = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub src: State,
    pub label: Symbol,
    pub dst: State,
}

impl Transition {
    pub const fn new(src: State, label: Symbol, dst: State) -> Self {
        Transition { src, label, dst }
    }

    #[inline]
    pub fn is_epsilon(&self) -> bool {
        self.label == EPSILON
    }
}

/// An ε-NFA with a single initial and a single final state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ENfa {
    num_states: usize,
    sigma: u32,
    initial: State,
    final_state: State,
    transitions: Vec<Transition>,
}

impl ENfa {
    /// Panics if an endpoint or label is out of range.
    pub fn new(
        num_states: usize,
        sigma: u32,
        initial: State,
        final_state: State,
        transitions: Vec<Transition>,
    ) -> Self {
        assert!((initial as usize) < num_states && (final_state as usize) < num_states);
        for t in &transitions {
            assert!(
                (t.src as usize) < num_states && (t.dst as usize) < num_states,
                "transition {t:?} leaves the state range 0..{num_states}"
            );
            assert!(t.label <= sigma, "label {} exceeds sigma {sigma}", t.label);
        }
        ENfa {
            num_states,
            sigma,
            initial,
            final_state,
            transitions,
        }
    }

    /// The canonical automaton for the empty language: two states, no transitions.
    pub fn empty(sigma: u32) -> Self {
        ENfa::new(2, sigma, 0, 1, Vec::new())
    }

    /// Normalise an automaton with several final states by adding one fresh
    /// final state reached by ε from each of them.
    pub fn with_final_states(
        num_states: usize,
        sigma: u32,
        initial: State,
        finals: &[State],
        mut transitions: Vec<Transition>,
    ) -> Self {
        if let [single] = finals {
            return ENfa::new(num_states, sigma, initial, *single, transitions);
        }
        let fresh = num_states as State;
        transitions.extend(finals.iter().map(|&f| Transition::new(f, EPSILON, fresh)));
        ENfa::new(num_states + 1, sigma, initial, fresh, transitions)
    }

    /// Chain automaton accepting exactly `word`.
    pub fn word(word: &[Symbol], sigma: u32) -> Self {
        let transitions = word
            .iter()
            .enumerate()
            .map(|(i, &a)| Transition::new(i as State, a, i as State + 1))
            .collect();
        ENfa::new(word.len() + 1, sigma, 0, word.len() as State, transitions)
    }

    #[inline]
    pub fn num_states(&self) -> usize {
        self.num_states
    }

    #[inline]
    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    #[inline]
    pub fn initial(&self) -> State {
        self.initial
    }

    #[inline]
    pub fn final_state(&self) -> State {
        self.final_state
    }

    #[inline]
    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// True for automata with no transitions and distinct initial and final
    /// states. After [`ENfa::trim`], this holds exactly when the language is empty.
    pub fn is_trivially_empty(&self) -> bool {
        self.transitions.is_empty() && self.initial != self.final_state
    }

    fn reachable(&self, from: State, forward: bool) -> Vec<bool> {
        let n = self.num_states;
        let mut adj_off = vec![0u32; n + 1];
        for t in &self.transitions {
            let key = if forward { t.src } else { t.dst };
            adj_off[key as usize + 1] += 1;
        }
        for i in 0..n {
            adj_off[i + 1] += adj_off[i];
        }
        let mut fill = adj_off.clone();
        let mut adj = vec![0u32; self.transitions.len()];
        for t in &self.transitions {
            let (key, other) = if forward {
                (t.src, t.dst)
            } else {
                (t.dst, t.src)
            };
            adj[fill[key as usize] as usize] = other;
            fill[key as usize] += 1;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from as usize] = true;
        while let Some(q) = queue.pop_front() {
            let q = q as usize;
            for &next in &adj[adj_off[q] as usize..adj_off[q + 1] as usize] {
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Restrict to states reachable from the initial state and co-reachable
    /// to the final state, renumbered densely in their original order.
    pub fn trim(&self) -> ENfa {
        let fwd = self.reachable(self.initial, true);
        if !fwd[self.final_state as usize] {
            return ENfa::empty(self.sigma);
        }
        let bwd = self.reachable(self.final_state, false);
        let mut rename = vec![u32::MAX; self.num_states];
        let mut next = 0u32;
        for q in 0..self.num_states {
            if fwd[q] && bwd[q] {
                rename[q] = next;
                next += 1;
            }
        }
        let transitions = self
            .transitions
            .iter()
            .filter(|t| rename[t.src as usize] != u32::MAX && rename[t.dst as usize] != u32::MAX)
            .map(|t| Transition::new(rename[t.src as usize], t.label, rename[t.dst as usize]))
            .collect();
        ENfa::new(
            next as usize,
            self.sigma,
            rename[self.initial as usize],
            rename[self.final_state as usize],
            transitions,
        )
    }

    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// nfa <n> <sigma> <q0> <qf>
    /// <src> <label> <dst>
    /// ```
    ///
    /// States are numbered `1..=n`, labels are `1..=sigma` or `e` for ε.
    /// Blank lines are ignored.
    pub fn from_text(text: &str) -> Result<ENfa> {
        let err = |line: usize, message: String| Error::AutomatonFormat { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing header".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 5 || fields[0] != "nfa" {
            return Err(err(hline, "expected `nfa <n> <sigma> <q0> <qf>`".into()));
        }
        let num = |s: &str, line: usize| -> Result<u64> {
            s.parse::<u64>()
                .map_err(|_| err(line, format!("not a number: {s:?}")))
        };
        let n = num(fields[1], hline)?;
        let sigma = num(fields[2], hline)?;
        if n == 0 {
            return Err(err(hline, "automaton needs at least one state".into()));
        }
        if n > u32::MAX as u64 || sigma >= u32::MAX as u64 {
            return Err(err(hline, "size out of range".into()));
        }
        let state = |s: &str, line: usize| -> Result<State> {
            let v = num(s, line)?;
            if v == 0 || v > n {
                return Err(err(line, format!("state {v} outside 1..={n}")));
            }
            Ok((v - 1) as State)
        };
        let q0 = state(fields[3], hline)?;
        let qf = state(fields[4], hline)?;

        let mut transitions = Vec::new();
        for (line, body) in lines {
            let parts: Vec<&str> = body.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(err(line, "expected `<src> <label> <dst>`".into()));
            }
            let src = state(parts[0], line)?;
            let dst = state(parts[2], line)?;
            let label = if parts[1] == "e" {
                EPSILON
            } else {
                let a = num(parts[1], line)?;
                if a == 0 || a > sigma {
                    return Err(err(line, format!("label {a} outside 1..={sigma}")));
                }
                a as Symbol
            };
            transitions.push(Transition::new(src, label, dst));
        }
        Ok(ENfa::new(n as usize, sigma as u32, q0, qf, transitions))
    }

    /// Inverse of [`ENfa::from_text`]; transitions are written in stored order.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.transitions.len());
        let _ = writeln!(
            out,
            "nfa {} {} {} {}",
            self.num_states,
            self.sigma,
            self.initial + 1,
            self.final_state + 1
        );
        for t in &self.transitions {
            if t.is_epsilon() {
                let _ = writeln!(out, "{} e {}", t.src + 1, t.dst + 1);
            } else {
                let _ = writeln!(out, "{} {} {}", t.src + 1, t.label, t.dst + 1);
            }
        }
        out
    }
}

/// Sorted adjacency lists `L[q]` and per-(state, label) slices `T[q, a]`.
///
/// `L[q]` is ordered by label, then target, except that a self-loop `(q, a, q)`
/// is moved to the front of its label group, so it is the first entry of
/// `T[q, a]`. Positions in [`TransitionIndex::edges`] serve as transition ids.
#[derive(Debug, Clone)]
pub struct TransitionIndex {
    sigma: u32,
    offsets: Vec<u32>,
    edges: Vec<Transition>,
    groups: LazyArray<(u32, u32)>,
}

fn counting_sort_by<F: Fn(&Transition) -> usize>(
    items: &[Transition],
    buckets: usize,
    key: F,
) -> Vec<Transition> {
    let mut count = vec![0usize; buckets + 1];
    for t in items {
        count[key(t) + 1] += 1;
    }
    for i in 0..buckets {
        count[i + 1] += count[i];
    }
    let mut out = vec![Transition::new(0, 0, 0); items.len()];
    for t in items {
        let k = key(t);
        out[count[k]] = *t;
        count[k] += 1;
    }
    out
}

impl TransitionIndex {
    /// Built with three stable counting-sort passes, so O(n + sigma + m).
    pub fn new(nfa: &ENfa) -> Self {
        let n = nfa.num_states();
        let stride = nfa.sigma() as usize + 1;
        let by_dst = counting_sort_by(nfa.transitions(), n, |t| t.dst as usize);
        let by_label = counting_sort_by(&by_dst, stride, |t| t.label as usize);
        let mut edges = counting_sort_by(&by_label, n, |t| t.src as usize);

        let mut offsets = vec![0u32; n + 1];
        for t in &edges {
            offsets[t.src as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }

        let mut groups = LazyArray::new(n * stride);
        let mut start = 0;
        while start < edges.len() {
            let Transition { src, label, .. } = edges[start];
            let mut end = start;
            let mut self_loop = None;
            while end < edges.len() && edges[end].src == src && edges[end].label == label {
                if self_loop.is_none() && edges[end].dst == src {
                    self_loop = Some(end);
                }
                end += 1;
            }
            if let Some(pos) = self_loop {
                edges[start..=pos].rotate_right(1);
            }
            groups.set(
                src as usize * stride + label as usize,
                (start as u32, end as u32),
            );
            start = end;
        }

        TransitionIndex {
            sigma: nfa.sigma(),
            offsets,
            edges,
            groups,
        }
    }

    #[inline]
    pub fn num_states(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// All transitions in index order.
    #[inline]
    pub fn edges(&self) -> &[Transition] {
        &self.edges
    }

    /// Id range of `L[q]`.
    #[inline]
    pub fn outgoing_range(&self, q: State) -> std::ops::Range<usize> {
        self.offsets[q as usize] as usize..self.offsets[q as usize + 1] as usize
    }

    /// `L[q]`
    #[inline]
    pub fn outgoing(&self, q: State) -> &[Transition] {
        &self.edges[self.outgoing_range(q)]
    }

    /// Id range of `T[q, a]`; empty when undefined (including `a > sigma`).
    #[inline]
    pub fn labelled_range(&self, q: State, a: Symbol) -> std::ops::Range<usize> {
        if a > self.sigma {
            return 0..0;
        }
        let stride = self.sigma as usize + 1;
        match self.groups.get(q as usize * stride + a as usize) {
            Some((s, e)) => s as usize..e as usize,
            None => 0..0,
        }
    }

    /// `T[q, a]`
    #[inline]
    pub fn labelled(&self, q: State, a: Symbol) -> &[Transition] {
        &self.edges[self.labelled_range(q, a)]
    }

    #[inline]
    pub fn has_self_loop(&self, q: State, a: Symbol) -> bool {
        self.labelled(q, a).first().is_some_and(|t| t.dst == q)
    }
}
