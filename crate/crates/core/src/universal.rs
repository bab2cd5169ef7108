//! Universal variants: is every `u ⪯ w` accepted?
//!
//! Prefix and infix are polynomial (one simulation per suffix). Subsequence
//! is coNP-complete and supersequence, extension and left-extension are
//! PSPACE-complete, so those checkers explore explicitly and stop at a cap.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::automaton::{ENfa, State, Symbol, TransitionIndex};
use crate::relation::RelationKind;
use crate::simulate::{eps_closure, step, Simulator, StateSet};

/// Default budget for the bounded checkers.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The explicit exploration generated more states than allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("exploration exceeded the cap of {cap} states")]
pub struct CapExceeded {
    pub cap: usize,
}

/// Length of the shortest prefix of `word` rejected by `nfa`, if any.
fn first_rejected_prefix(sim: &mut Simulator<'_>, word: &[Symbol]) -> Option<usize> {
    sim.start();
    if !sim.accepting() {
        return Some(0);
    }
    for (i, &a) in word.iter().enumerate() {
        sim.advance(a);
        if !sim.accepting() {
            return Some(i + 1);
        }
    }
    None
}

/// Is every prefix of `word`, ε and `word` included, in `L(nfa)`? O(|w| m).
pub fn universal_prefix(nfa: &ENfa, index: &TransitionIndex, word: &[Symbol]) -> bool {
    first_rejected_prefix(&mut Simulator::new(nfa, index), word).is_none()
}

/// Is every infix of `word` in `L(nfa)`? The prefix check on every suffix,
/// O(|w|² m).
pub fn universal_infix(nfa: &ENfa, index: &TransitionIndex, word: &[Symbol]) -> bool {
    infix_counterexample(nfa, index, word).is_none()
}

fn infix_counterexample(
    nfa: &ENfa,
    index: &TransitionIndex,
    word: &[Symbol],
) -> Option<Vec<Symbol>> {
    let mut sim = Simulator::new(nfa, index);
    (0..=word.len()).find_map(|i| {
        first_rejected_prefix(&mut sim, &word[i..]).map(|len| word[i..i + len].to_vec())
    })
}

/// Universal check for any relation.
///
/// Prefix, infix and equality are decided directly and ignore the cap. For
/// subsequence the distinct subsequences of `word` are enumerated, each
/// counting against `cap`. For supersequence, extension and left-extension,
/// the strings related to `word` form a regular language over `1..=σ'`
/// (`σ'` the larger of the automaton's alphabet and the largest symbol of
/// `word`); inclusion in `L(nfa)` is checked on the fly over pairs of a
/// deterministic state for that language and an ε-closed state set of
/// `nfa`, each new pair counting against `cap`.
pub fn universal_bounded(
    nfa: &ENfa,
    word: &[Symbol],
    relation: RelationKind,
    cap: usize,
) -> Result<bool, CapExceeded> {
    counterexample(nfa, word, relation, cap).map(|c| c.is_none())
}

/// A string related to `word` that `nfa` rejects, or `None` if there is no
/// such string. For the PSPACE-hard relations the counterexample is a
/// shortest one.
pub fn counterexample(
    nfa: &ENfa,
    word: &[Symbol],
    relation: RelationKind,
    cap: usize,
) -> Result<Option<Vec<Symbol>>, CapExceeded> {
    let nfa = nfa.trim();
    let index = TransitionIndex::new(&nfa);
    let mut sim = Simulator::new(&nfa, &index);
    Ok(match relation {
        RelationKind::Equality => (!sim.accepts(word)).then(|| word.to_vec()),
        RelationKind::Prefix => {
            first_rejected_prefix(&mut sim, word).map(|len| word[..len].to_vec())
        }
        RelationKind::Infix => infix_counterexample(&nfa, &index, word),
        RelationKind::Subsequence => subsequence_counterexample(&nfa, &index, word, cap)?,
        RelationKind::Supersequence | RelationKind::Extension | RelationKind::LeftExtension => {
            let lambda = RelatedStrings::new(word, relation, nfa.sigma());
            inclusion_counterexample(&nfa, &index, &lambda, cap)?
        }
    })
}

const NONE: u32 = u32::MAX;

/// `next[pos][k]`: first index `j ≥ pos` with `word[j] == alphabet[k]`.
struct NextOccurrence {
    alphabet: Vec<Symbol>,
    next: Vec<u32>,
}

impl NextOccurrence {
    fn new(word: &[Symbol]) -> Self {
        let mut alphabet = word.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let k = alphabet.len();
        let mut next = vec![NONE; (word.len() + 1) * k];
        for pos in (0..word.len()).rev() {
            let (row, rest) = next[pos * k..].split_at_mut(k);
            row.copy_from_slice(&rest[..k]);
            let slot = alphabet.binary_search(&word[pos]).unwrap();
            row[slot] = pos as u32;
        }
        NextOccurrence { alphabet, next }
    }

    #[inline]
    fn get(&self, pos: usize, k: usize) -> u32 {
        self.next[pos * self.alphabet.len() + k]
    }
}

/// Every distinct subsequence of `word` exactly once, including ε.
///
/// Each distinct subsequence has exactly one leftmost embedding, so walking
/// "next occurrence of symbol a at or after pos" enumerates them without
/// duplicates.
pub fn distinct_subsequences(word: &[Symbol]) -> Vec<Vec<Symbol>> {
    let table = NextOccurrence::new(word);
    let mut out = vec![Vec::new()];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    let mut path = Vec::new();
    while let Some(top) = stack.last_mut() {
        if top.1 == table.alphabet.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let (pos, k) = *top;
        top.1 += 1;
        let j = table.get(pos, k);
        if j != NONE {
            path.push(table.alphabet[k]);
            out.push(path.clone());
            stack.push((j as usize + 1, 0));
        }
    }
    out
}

fn subsequence_counterexample(
    nfa: &ENfa,
    index: &TransitionIndex,
    word: &[Symbol],
    cap: usize,
) -> Result<Option<Vec<Symbol>>, CapExceeded> {
    let table = NextOccurrence::new(word);
    let qf = nfa.final_state();
    // levels[d] is the active set after the current path's first d symbols
    let mut levels = vec![StateSet::new(nfa.num_states())];
    levels[0].insert(nfa.initial());
    eps_closure(index, &mut levels[0]);
    if !levels[0].contains(qf) {
        return Ok(Some(Vec::new()));
    }
    let mut count = 1usize;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    let mut path = Vec::new();
    while let Some(top) = stack.last_mut() {
        if top.1 == table.alphabet.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let (pos, k) = *top;
        top.1 += 1;
        let j = table.get(pos, k);
        if j == NONE {
            continue;
        }
        count += 1;
        if count > cap {
            return Err(CapExceeded { cap });
        }
        let depth = path.len();
        if levels.len() == depth + 1 {
            levels.push(StateSet::new(nfa.num_states()));
        }
        let (done, rest) = levels.split_at_mut(depth + 1);
        let a = table.alphabet[k];
        step(index, &done[depth], a, &mut rest[0]);
        path.push(a);
        if !rest[0].contains(qf) {
            return Ok(Some(path));
        }
        stack.push((j as usize + 1, 0));
    }
    Ok(None)
}

/// Complete DFA for the strings related to a fixed word under one of the
/// infinite relations. States are `0..=|w|`; `|w|` is the only accepting one.
struct RelatedStrings {
    len: usize,
    sigma: u32,
    delta: Vec<u32>,
}

impl RelatedStrings {
    fn new(word: &[Symbol], relation: RelationKind, nfa_sigma: u32) -> Self {
        let sigma = word.iter().copied().max().unwrap_or(0).max(nfa_sigma);
        let len = word.len();
        let width = sigma as usize + 1;
        let mut delta = vec![0u32; (len + 1) * width];
        match relation {
            // greedy embedding of w: advance on the next needed symbol
            RelationKind::Supersequence => {
                for i in 0..=len {
                    for a in 1..=sigma {
                        let hit = i < len && word[i] == a;
                        delta[i * width + a as usize] = (i + usize::from(hit)) as u32;
                    }
                }
            }
            // string matching automaton: longest suffix that is a prefix of w
            RelationKind::Extension | RelationKind::LeftExtension => {
                let mut fallback = 0usize;
                for j in 0..=len {
                    for a in 1..=sigma as usize {
                        delta[j * width + a] = if j == 0 {
                            0
                        } else {
                            delta[fallback * width + a]
                        };
                    }
                    if j < len {
                        if j > 0 {
                            let f = delta[fallback * width + word[j] as usize] as usize;
                            delta[j * width + word[j] as usize] = (j + 1) as u32;
                            fallback = f;
                        } else {
                            delta[word[0] as usize] = 1;
                        }
                    }
                }
                if relation == RelationKind::Extension {
                    // once w has occurred, stay accepting
                    for a in 1..=sigma as usize {
                        delta[len * width + a] = len as u32;
                    }
                }
            }
            _ => unreachable!("{relation} is a finite relation"),
        }
        RelatedStrings { len, sigma, delta }
    }

    #[inline]
    fn step(&self, d: u32, a: Symbol) -> u32 {
        self.delta[d as usize * (self.sigma as usize + 1) + a as usize]
    }

    #[inline]
    fn accepting(&self, d: u32) -> bool {
        d as usize == self.len
    }
}

struct Node {
    lambda: u32,
    states: Box<[State]>,
    parent: u32,
    symbol: Symbol,
}

/// Breadth-first search for a string accepted by `lambda` and rejected by
/// `nfa`, over pairs (lambda state, ε-closed state set).
fn inclusion_counterexample(
    nfa: &ENfa,
    index: &TransitionIndex,
    lambda: &RelatedStrings,
    cap: usize,
) -> Result<Option<Vec<Symbol>>, CapExceeded> {
    let qf = nfa.final_state();
    let mut seen: HashMap<(u32, Box<[State]>), u32> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut current = StateSet::new(nfa.num_states());
    let mut next = StateSet::new(nfa.num_states());
    current.insert(nfa.initial());
    eps_closure(index, &mut current);
    let start: Box<[State]> = current.to_sorted_vec().into();
    seen.insert((0, start.clone()), 0);
    nodes.push(Node {
        lambda: 0,
        states: start,
        parent: NONE,
        symbol: 0,
    });

    let mut head = 0usize;
    while head < nodes.len() {
        let id = head as u32;
        head += 1;
        let node = &nodes[id as usize];
        if lambda.accepting(node.lambda) && node.states.binary_search(&qf).is_err() {
            let mut witness = Vec::new();
            let mut cur = id;
            while nodes[cur as usize].parent != NONE {
                witness.push(nodes[cur as usize].symbol);
                cur = nodes[cur as usize].parent;
            }
            witness.reverse();
            return Ok(Some(witness));
        }
        current.clear();
        for &q in node.states.iter() {
            current.insert(q);
        }
        let d = node.lambda;
        for a in 1..=lambda.sigma {
            step(index, &current, a, &mut next);
            let key = (lambda.step(d, a), Box::from(next.to_sorted_vec()));
            if let Entry::Vacant(slot) = seen.entry(key) {
                if nodes.len() >= cap {
                    return Err(CapExceeded { cap });
                }
                let (lambda_state, states) = slot.key().clone();
                slot.insert(nodes.len() as u32);
                nodes.push(Node {
                    lambda: lambda_state,
                    states,
                    parent: id,
                    symbol: a,
                });
            }
        }
    }
    Ok(None)
}
