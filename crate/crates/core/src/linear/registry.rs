use crate::automaton::{State, Symbol, TransitionIndex};
use crate::lazy::LazyArray;

/// Self-loop lookup used by [`SelfLoopRegistry::pop`].
pub trait SelfLoops {
    fn has_self_loop(&self, q: State, a: Symbol) -> bool;
}

impl SelfLoops for TransitionIndex {
    #[inline]
    fn has_self_loop(&self, q: State, a: Symbol) -> bool {
        TransitionIndex::has_self_loop(self, q, a)
    }
}

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RegistryStats {
    pub pushes: usize,
    pub pops: usize,
    /// States visited by pop traversals.
    pub traversed: usize,
}

impl RegistryStats {
    /// Total work: one unit per operation plus one per traversed state.
    pub fn cost(&self) -> usize {
        self.pushes + self.pops + self.traversed
    }
}

/// A set of states supporting "remove every state without an `a`-self-loop"
/// in amortised O(1) per operation plus O(1) per self-loop overall.
///
/// States live in a doubly linked list, appended on the right. `examined[q, a]`
/// records that `q` was found to have an `a`-self-loop. Two invariants hold:
/// examined flags for a symbol form a prefix of the list, and a flag is only
/// set when the loop exists. A pop therefore walks from the right and stops at
/// the first examined state.
#[derive(Debug, Clone)]
pub struct SelfLoopRegistry {
    prev: Vec<u32>,
    next: Vec<u32>,
    head: u32,
    tail: u32,
    in_list: Vec<bool>,
    #[cfg(debug_assertions)]
    ever_pushed: Vec<bool>,
    examined: LazyArray<bool>,
    stride: usize,
    sigma: u32,
    len: usize,
    stats: RegistryStats,
}

impl SelfLoopRegistry {
    pub fn new(num_states: usize, sigma: u32) -> Self {
        let stride = sigma as usize + 1;
        SelfLoopRegistry {
            prev: vec![NIL; num_states],
            next: vec![NIL; num_states],
            head: NIL,
            tail: NIL,
            in_list: vec![false; num_states],
            #[cfg(debug_assertions)]
            ever_pushed: vec![false; num_states],
            examined: LazyArray::new(num_states * stride),
            stride,
            sigma,
            len: 0,
            stats: RegistryStats::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, q: State) -> bool {
        self.in_list[q as usize]
    }

    pub fn stats(&self) -> RegistryStats {
        self.stats
    }

    /// Stored states, left to right.
    pub fn states(&self) -> Vec<State> {
        let mut out = Vec::with_capacity(self.len);
        let mut cur = self.head;
        while cur != NIL {
            out.push(cur);
            cur = self.next[cur as usize];
        }
        out
    }

    /// Append `q` on the right. Each state may be pushed at most once.
    pub fn push(&mut self, q: State) {
        #[cfg(debug_assertions)]
        {
            assert!(!self.ever_pushed[q as usize], "state {q} pushed twice");
            self.ever_pushed[q as usize] = true;
        }
        let qi = q as usize;
        self.prev[qi] = self.tail;
        self.next[qi] = NIL;
        if self.tail == NIL {
            self.head = q;
        } else {
            self.next[self.tail as usize] = q;
        }
        self.tail = q;
        self.in_list[qi] = true;
        self.len += 1;
        self.stats.pushes += 1;
    }

    #[inline]
    fn is_examined(&self, q: State, a: Symbol) -> bool {
        a <= self.sigma && self.examined.is_set(q as usize * self.stride + a as usize)
    }

    fn unlink(&mut self, q: State) {
        let qi = q as usize;
        let (p, n) = (self.prev[qi], self.next[qi]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.in_list[qi] = false;
        self.len -= 1;
    }

    /// Remove every stored state without an `a`-self-loop, appending them to
    /// `out` in right-to-left order.
    pub fn pop<L: SelfLoops + ?Sized>(&mut self, a: Symbol, loops: &L, out: &mut Vec<State>) {
        self.stats.pops += 1;
        let mut cur = self.tail;
        while cur != NIL && !self.is_examined(cur, a) {
            self.stats.traversed += 1;
            let left = self.prev[cur as usize];
            if a <= self.sigma && loops.has_self_loop(cur, a) {
                self.examined
                    .set(cur as usize * self.stride + a as usize, true);
            } else {
                self.unlink(cur);
                out.push(cur);
            }
            cur = left;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    struct LoopSet(HashSet<(State, Symbol)>);

    impl SelfLoops for LoopSet {
        fn has_self_loop(&self, q: State, a: Symbol) -> bool {
            self.0.contains(&(q, a))
        }
    }

    fn loops(pairs: &[(State, Symbol)]) -> LoopSet {
        LoopSet(pairs.iter().copied().collect())
    }

    #[test]
    fn push_order_is_preserved() {
        let mut r = SelfLoopRegistry::new(10, 2);
        r.push(3);
        r.push(7);
        assert_eq!(r.states(), vec![3, 7]);
    }

    #[test]
    fn push_into_empty_gives_singleton() {
        let mut r = SelfLoopRegistry::new(4, 1);
        r.push(2);
        assert_eq!(r.states(), vec![2]);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn pop_returns_state_without_loop() {
        let mut r = SelfLoopRegistry::new(4, 1);
        r.push(3);
        let mut out = Vec::new();
        r.pop(1, &loops(&[]), &mut out);
        assert_eq!(out, vec![3]);
        assert!(r.is_empty());
    }

    #[test]
    fn state_with_loop_survives_and_is_examined() {
        let mut r = SelfLoopRegistry::new(4, 1);
        r.push(1);
        let mut out = Vec::new();
        r.pop(1, &loops(&[(1, 1)]), &mut out);
        assert!(out.is_empty());
        assert!(r.is_examined(1, 1));
        assert_eq!(r.states(), vec![1]);
    }

    #[test]
    fn pop_separates_loop_and_non_loop_states() {
        let mut r = SelfLoopRegistry::new(4, 1);
        r.push(0);
        r.push(1);
        let mut out = Vec::new();
        r.pop(1, &loops(&[(1, 1)]), &mut out);
        assert_eq!(out, vec![0]);
        assert_eq!(r.states(), vec![1]);
    }

    #[test]
    fn symbol_outside_alphabet_removes_everything() {
        let mut r = SelfLoopRegistry::new(3, 1);
        r.push(0);
        r.push(2);
        let mut out = Vec::new();
        r.pop(5, &loops(&[(0, 1)]), &mut out);
        assert_eq!(out, vec![2, 0]);
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "pushed twice")]
    fn double_push_is_a_contract_violation() {
        let mut r = SelfLoopRegistry::new(3, 1);
        r.push(1);
        let mut out = Vec::new();
        r.pop(1, &loops(&[]), &mut out);
        r.push(1);
    }
}
