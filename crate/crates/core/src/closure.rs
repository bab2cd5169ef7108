//! Closure automata and SCC condensation.
//!
//! * [`upward_automaton`] (`A_⊑`) accepts every string that has a
//!   subsequence in `L(A)`.
//! * [`downward_automaton`] (`A_⊒`) accepts every string that has a
//!   supersequence in `L(A)`.
//! * [`condense`] quotients an automaton by its strongly connected
//!   components. For `A_⊒` this preserves the language.

use crate::automaton::{ENfa, State, Transition, EPSILON};
use crate::graph::{strongly_connected_components, Csr};

/// Add a self-loop `(p, b, p)` for every state `p` and symbol `b`.
///
/// Size is Θ(nσ + m); the linear subsequence matcher never builds this.
pub fn upward_automaton(nfa: &ENfa) -> ENfa {
    let mut transitions = nfa.transitions().to_vec();
    transitions.reserve(nfa.num_states() * nfa.sigma() as usize);
    for p in 0..nfa.num_states() as State {
        for b in 1..=nfa.sigma() {
            transitions.push(Transition::new(p, b, p));
        }
    }
    ENfa::new(
        nfa.num_states(),
        nfa.sigma(),
        nfa.initial(),
        nfa.final_state(),
        transitions,
    )
}

/// Add an ε-transition parallel to every symbol-labelled transition.
pub fn downward_automaton(nfa: &ENfa) -> ENfa {
    let mut transitions = nfa.transitions().to_vec();
    transitions.extend(
        nfa.transitions()
            .iter()
            .filter(|t| !t.is_epsilon())
            .map(|t| Transition::new(t.src, EPSILON, t.dst)),
    );
    ENfa::new(
        nfa.num_states(),
        nfa.sigma(),
        nfa.initial(),
        nfa.final_state(),
        transitions,
    )
}

/// Quotient of an automaton by its SCCs.
#[derive(Debug, Clone)]
pub struct Condensation {
    /// SCC id of each original state.
    pub component_of: Vec<State>,
    /// Automaton on SCC ids. Ids are topologically ordered: every transition
    /// that is not a self-loop goes from a lower id to a higher one.
    pub condensed: ENfa,
}

/// O(n + m) SCC computation plus a sort to deduplicate transitions.
pub fn condense(nfa: &ENfa) -> Condensation {
    let graph = Csr::from_edges(
        nfa.num_states(),
        nfa.transitions().iter().map(|t| (t.src, t.dst)),
    );
    let comps = strongly_connected_components(&graph);
    let last = comps.count as State - 1;
    // Tarjan ids run against the edges; flip them
    let component_of: Vec<State> = comps.component_of.iter().map(|&c| last - c).collect();

    let mut transitions: Vec<Transition> = nfa
        .transitions()
        .iter()
        .map(|t| {
            Transition::new(
                component_of[t.src as usize],
                t.label,
                component_of[t.dst as usize],
            )
        })
        .collect();
    transitions.sort_unstable();
    transitions.dedup();

    let condensed = ENfa::new(
        comps.count,
        nfa.sigma(),
        component_of[nfa.initial() as usize],
        component_of[nfa.final_state() as usize],
        transitions,
    );
    Condensation {
        component_of,
        condensed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::topological_order;
    use crate::regex::compile;
    use crate::simulate::accepts;

    #[test]
    fn upward_accepts_supersequences_of_members() {
        let (ast, mut table) = crate::regex::parse_regex("ab").unwrap();
        table.intern('x');
        // loops are added for every symbol of the alphabet, x included
        let nfa = crate::regex::compile_thompson(&ast, table.len() as u32);
        let up = upward_automaton(&nfa);
        assert!(accepts(&up, &table.encode("xaxbx")));
        assert!(accepts(&up, &table.encode("aabb")));
        assert!(!accepts(&up, &table.encode("ba")));
        let (plain, mut t2) = compile("ab").unwrap();
        assert!(!accepts(&upward_automaton(&plain), &t2.encode("xaxbx")));
    }

    #[test]
    fn downward_accepts_subsequences_of_members() {
        let (nfa, mut table) = compile("axb").unwrap();
        let down = downward_automaton(&nfa);
        assert!(accepts(&down, &table.encode("ab")));
        assert!(accepts(&down, &table.encode("")));
        let (single, mut t2) = compile("a").unwrap();
        assert!(!accepts(&downward_automaton(&single), &t2.encode("aa")));
    }

    #[test]
    fn downward_size_at_most_double() {
        let (nfa, _) = compile("(ab|c)*d").unwrap();
        assert!(downward_automaton(&nfa).num_transitions() <= 2 * nfa.num_transitions());
    }

    #[test]
    fn condensing_acyclic_is_bijective() {
        let (nfa, _) = compile("abc").unwrap();
        let c = condense(&nfa);
        assert_eq!(c.condensed.num_states(), nfa.num_states());
        assert_eq!(c.condensed.num_transitions(), nfa.num_transitions());
        let mut seen = c.component_of.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), nfa.num_states());
    }

    #[test]
    fn two_cycle_becomes_single_state_with_loops() {
        let nfa = ENfa::new(
            2,
            2,
            0,
            1,
            vec![Transition::new(0, 1, 1), Transition::new(1, 2, 0)],
        );
        let c = condense(&nfa);
        assert_eq!(c.condensed.num_states(), 1);
        assert_eq!(
            c.condensed.transitions(),
            &[Transition::new(0, 1, 0), Transition::new(0, 2, 0)]
        );
    }

    #[test]
    fn condensed_ids_are_topological() {
        let (nfa, _) = compile("a(bc)*d(e|f)*").unwrap();
        let c = condense(&downward_automaton(&nfa));
        for t in c.condensed.transitions() {
            assert!(t.src <= t.dst);
        }
        let g = Csr::from_edges(
            c.condensed.num_states(),
            c.condensed.transitions().iter().map(|t| (t.src, t.dst)),
        );
        assert!(topological_order(&g).is_some());
    }
}
