//! One entry point for the Boolean matching problem under every relation.

use crate::automaton::{ENfa, Symbol, TransitionIndex};
use crate::linear::{match_subsequence, match_supersequence};
use crate::quantitative::{build_product_graph, st_reachable};
use crate::relation::RelationKind;
use crate::simulate::simulate_membership;

/// Is there some `u ⪯ word` with `u ∈ L(nfa)`?
///
/// Subsequence and supersequence use the linear-time matchers, equality is
/// plain simulation, and the remaining relations test source-to-target
/// reachability in the product graph (O(|w| m)).
pub fn match_relation(nfa: &ENfa, word: &[Symbol], relation: RelationKind) -> bool {
    let nfa = nfa.trim();
    match relation {
        RelationKind::Subsequence => {
            let index = TransitionIndex::new(&nfa);
            match_subsequence(&nfa, &index, word)
        }
        RelationKind::Supersequence => match_supersequence(&nfa, word),
        RelationKind::Equality => simulate_membership(&nfa, &TransitionIndex::new(&nfa), word),
        RelationKind::Infix
        | RelationKind::Prefix
        | RelationKind::Extension
        | RelationKind::LeftExtension => st_reachable(&build_product_graph(&nfa, word, relation)),
    }
}
