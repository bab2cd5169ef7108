//! Brute-force reference implementations. Slow on purpose, and written
//! without reusing the traversal code of the engines they check.

use std::collections::{BTreeSet, VecDeque};

use crate::automaton::{ENfa, State, Symbol, TransitionIndex, EPSILON};
use crate::error::{Error, Result};
use crate::quantitative::{LengthAnswer, Mode};
use crate::regex::RegexAst;
use crate::relation::RelationKind;
use crate::simulate::simulate_membership;

/// `Λ(w) ∩ Σ^{≤max_len}`, sorted and without duplicates.
///
/// The alphabet for the infinite relations is `1..=max(sigma, max(w))`.
/// `max_len` is required for supersequence, extension and left-extension
/// and optional otherwise.
pub fn enumerate_relation(
    word: &[Symbol],
    relation: RelationKind,
    max_len: Option<usize>,
    sigma: u32,
) -> Result<Vec<Vec<Symbol>>> {
    let mut out: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    match relation {
        RelationKind::Equality => {
            out.insert(word.to_vec());
        }
        RelationKind::Prefix => {
            out.extend((0..=word.len()).map(|i| word[..i].to_vec()));
        }
        RelationKind::Infix => {
            out.insert(Vec::new());
            for i in 0..word.len() {
                for j in i + 1..=word.len() {
                    out.insert(word[i..j].to_vec());
                }
            }
        }
        RelationKind::Subsequence => {
            assert!(word.len() < 31, "too long to enumerate subsequences");
            for mask in 0u32..1 << word.len() {
                let sub = (0..word.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| word[i])
                    .collect();
                out.insert(sub);
            }
        }
        RelationKind::Supersequence | RelationKind::Extension | RelationKind::LeftExtension => {
            let max_len = max_len.ok_or(Error::MissingLengthBound(relation.name()))?;
            let sigma = word.iter().copied().max().unwrap_or(0).max(sigma);
            for len in word.len()..=max_len {
                for_each_string(sigma, len, |u| {
                    if related(u, word, relation) {
                        out.insert(u.to_vec());
                    }
                });
            }
        }
    }
    if let Some(max_len) = max_len {
        out.retain(|u| u.len() <= max_len);
    }
    Ok(out.into_iter().collect())
}

/// The relations spelled out by position search, independently of
/// [`RelationKind::holds`].
fn related(u: &[Symbol], w: &[Symbol], relation: RelationKind) -> bool {
    fn embeds(small: &[Symbol], big: &[Symbol]) -> bool {
        // dynamic programming over (prefix of small, prefix of big)
        let mut reach = vec![false; small.len() + 1];
        reach[0] = true;
        for &b in big {
            for i in (0..small.len()).rev() {
                if reach[i] && small[i] == b {
                    reach[i + 1] = true;
                }
            }
        }
        reach[small.len()]
    }
    fn occurs(small: &[Symbol], big: &[Symbol]) -> bool {
        (0..=big.len().saturating_sub(small.len()))
            .any(|i| big.len() >= small.len() && (0..small.len()).all(|k| big[i + k] == small[k]))
    }
    match relation {
        RelationKind::Infix => occurs(u, w),
        RelationKind::Prefix => u.len() <= w.len() && w[..u.len()] == *u,
        RelationKind::Extension => occurs(w, u),
        RelationKind::LeftExtension => w.len() <= u.len() && u[u.len() - w.len()..] == *w,
        RelationKind::Subsequence => embeds(u, w),
        RelationKind::Supersequence => embeds(w, u),
        RelationKind::Equality => u == w,
    }
}

/// Call `f` on every string of length `len` over `1..=sigma`, in
/// lexicographic order.
fn for_each_string(sigma: u32, len: usize, mut f: impl FnMut(&[Symbol])) {
    if sigma == 0 {
        if len == 0 {
            f(&[]);
        }
        return;
    }
    let mut u = vec![1; len];
    loop {
        f(&u);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if u[i] < sigma {
                u[i] += 1;
                break;
            }
            u[i] = 1;
        }
    }
}

/// Does some `u ⪯ w` belong to `L(nfa)`? Enumeration for the finite
/// relations, the layered search of [`brute_quantitative`] otherwise.
pub fn brute_match(nfa: &ENfa, word: &[Symbol], relation: RelationKind) -> bool {
    brute_quantitative(nfa, word, relation, Mode::Min).is_match()
}

/// Min or max over all `u ⪯ w` with `u ∈ L(nfa)`.
///
/// Finite relations: enumerate and test membership. Infinite relations:
/// strings related to `w` are recognised by a small NFA `R` (built here from
/// the definitions), so the matching strings are those of the product
/// `R × A` with `P = (|w| + 1) n` states. Any accepted string of length at
/// least `P` can be pumped, and if one exists then one exists with length in
/// `[P, 2P)`. So exploring all lengths below `2P` layer by layer decides
/// min, max and unboundedness exactly.
pub fn brute_quantitative(
    nfa: &ENfa,
    word: &[Symbol],
    relation: RelationKind,
    mode: Mode,
) -> LengthAnswer {
    if relation.is_finite() {
        let index = TransitionIndex::new(nfa);
        let candidates = enumerate_relation(word, relation, None, nfa.sigma()).unwrap();
        let matching = candidates
            .into_iter()
            .filter(|u| simulate_membership(nfa, &index, u));
        let best = match mode {
            Mode::Min => matching.min_by_key(|u| u.len()),
            Mode::Max => matching.max_by_key(|u| u.len()),
        };
        return best.map_or(LengthAnswer::NoMatch, LengthAnswer::finite);
    }
    layered_search(nfa, word, relation, mode)
}

/// Nondeterministic recogniser for the strings related to `w`: states
/// `0..=|w|`, accepting `|w|`. Returns the successor set of `i` on `a`.
fn related_successors(word: &[Symbol], relation: RelationKind, i: usize, a: Symbol) -> Vec<usize> {
    let len = word.len();
    let matches_next = i < len && word[i] == a;
    let mut out = Vec::new();
    match relation {
        // skip any symbol, or consume the next symbol of w
        RelationKind::Supersequence => {
            out.push(i);
            if matches_next {
                out.push(i + 1);
            }
        }
        // Σ* w: free symbols only before w starts
        RelationKind::LeftExtension => {
            if i == 0 {
                out.push(0);
            }
            if matches_next {
                out.push(i + 1);
            }
        }
        // Σ* w Σ*
        RelationKind::Extension => {
            if i == 0 || i == len {
                out.push(i);
            }
            if matches_next {
                out.push(i + 1);
            }
        }
        _ => unreachable!(),
    }
    out
}

/// ε-closure of a set of automaton states, by depth-first search over the
/// raw transition list.
fn closure(nfa: &ENfa, set: &mut BTreeSet<State>) {
    let mut stack: Vec<State> = set.iter().copied().collect();
    while let Some(q) = stack.pop() {
        for t in nfa.transitions() {
            if t.src == q && t.label == EPSILON && set.insert(t.dst) {
                stack.push(t.dst);
            }
        }
    }
}

/// Plain adjacency lists: `symbol[q][a]` and `epsilon[q]`.
struct Adjacency {
    symbol: Vec<Vec<Vec<State>>>,
    epsilon: Vec<Vec<State>>,
}

impl Adjacency {
    fn new(nfa: &ENfa, sigma: u32) -> Self {
        let n = nfa.num_states();
        let mut symbol = vec![vec![Vec::new(); sigma as usize + 1]; n];
        let mut epsilon = vec![Vec::new(); n];
        for t in nfa.transitions() {
            if t.label == EPSILON {
                epsilon[t.src as usize].push(t.dst);
            } else {
                symbol[t.src as usize][t.label as usize].push(t.dst);
            }
        }
        Adjacency { symbol, epsilon }
    }
}

const ABSENT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// Layer `k` holds the product states `(r, q)` (id `r * n + q`) reachable by
/// some string of length exactly `k`, each with one predecessor in layer
/// `k - 1` and the symbol read.
#[derive(Clone, PartialEq, Eq)]
struct Layer {
    prev: Vec<u32>,
    symbol: Vec<Symbol>,
}

impl Layer {
    fn new(size: usize) -> Self {
        Layer {
            prev: vec![ABSENT; size],
            symbol: vec![0; size],
        }
    }

    fn has(&self, id: usize) -> bool {
        self.prev[id] != ABSENT
    }

    fn same_states(&self, other: &Layer) -> bool {
        self.prev
            .iter()
            .zip(&other.prev)
            .all(|(a, b)| (*a == ABSENT) == (*b == ABSENT))
    }

    /// ε-moves of the automaton component; added states inherit the
    /// provenance of the state they are reached from.
    fn close(&mut self, adj: &Adjacency, n: usize) {
        let mut stack: Vec<usize> = (0..self.prev.len()).filter(|&id| self.has(id)).collect();
        while let Some(id) = stack.pop() {
            let (r, q) = (id / n, id % n);
            for &q2 in &adj.epsilon[q] {
                let id2 = r * n + q2 as usize;
                if !self.has(id2) {
                    self.prev[id2] = self.prev[id];
                    self.symbol[id2] = self.symbol[id];
                    stack.push(id2);
                }
            }
        }
    }

    fn is_empty(&self) -> bool {
        self.prev.iter().all(|&p| p == ABSENT)
    }
}

fn layered_search(nfa: &ENfa, word: &[Symbol], relation: RelationKind, mode: Mode) -> LengthAnswer {
    let len = word.len();
    let n = nfa.num_states();
    let sigma = word.iter().copied().max().unwrap_or(0).max(nfa.sigma());
    let pairs = (len + 1) * n;
    let adj = Adjacency::new(nfa, sigma);
    let target = len * n + nfa.final_state() as usize;

    let mut first = Layer::new(pairs);
    first.prev[nfa.initial() as usize] = ROOT;
    first.close(&adj, n);
    let mut layers = vec![first];
    // set when a layer repeats its predecessor, so every later layer would too
    let mut stable = false;
    while layers.len() < 2 * pairs {
        let prev = layers.last().unwrap();
        let mut next = Layer::new(pairs);
        for id in (0..pairs).filter(|&id| prev.has(id)) {
            let (r, q) = (id / n, id % n);
            for a in 1..=sigma {
                let targets = &adj.symbol[q][a as usize];
                if targets.is_empty() {
                    continue;
                }
                for r2 in related_successors(word, relation, r, a) {
                    for &q2 in targets {
                        let id2 = r2 * n + q2 as usize;
                        if !next.has(id2) {
                            next.prev[id2] = id as u32;
                            next.symbol[id2] = a;
                        }
                    }
                }
            }
        }
        next.close(&adj, n);
        if next.is_empty() {
            break;
        }
        if next.same_states(prev) {
            stable = true;
            layers.push(next);
            break;
        }
        layers.push(next);
    }

    let accepted: Vec<usize> = (0..layers.len())
        .filter(|&k| layers[k].has(target))
        .collect();
    let k = match (mode, accepted.first(), accepted.last()) {
        (_, None, _) => return LengthAnswer::NoMatch,
        (Mode::Min, Some(&k), _) => k,
        (Mode::Max, _, Some(&k)) if k >= pairs || (stable && k == layers.len() - 1) => {
            return LengthAnswer::Unbounded
        }
        (Mode::Max, _, Some(&k)) => k,
        _ => unreachable!(),
    };
    let mut witness = Vec::with_capacity(k);
    let mut id = target;
    for layer in layers[..=k].iter().rev() {
        match layer.prev[id] {
            ROOT => break,
            p => {
                witness.push(layer.symbol[id]);
                id = p as usize;
            }
        }
    }
    witness.reverse();
    LengthAnswer::finite(witness)
}

/// Is every `u ⪯ w` in `L(nfa)`? Finite relations enumerate; infinite ones
/// explore pairs (subset of the related-strings NFA, subset of `nfa`) until
/// no new pair appears. No cap: small inputs only.
pub fn brute_universal(nfa: &ENfa, word: &[Symbol], relation: RelationKind) -> bool {
    if relation.is_finite() {
        let index = TransitionIndex::new(nfa);
        return enumerate_relation(word, relation, None, nfa.sigma())
            .unwrap()
            .iter()
            .all(|u| simulate_membership(nfa, &index, u));
    }
    let len = word.len();
    let sigma = word.iter().copied().max().unwrap_or(0).max(nfa.sigma());
    let mut start_q = BTreeSet::from([nfa.initial()]);
    closure(nfa, &mut start_q);
    let start = (BTreeSet::from([0usize]), start_q);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((rs, qs)) = queue.pop_front() {
        if rs.contains(&len) && !qs.contains(&nfa.final_state()) {
            return false;
        }
        for a in 1..=sigma {
            let rs2: BTreeSet<usize> = rs
                .iter()
                .flat_map(|&r| related_successors(word, relation, r, a))
                .collect();
            let mut qs2: BTreeSet<State> = nfa
                .transitions()
                .iter()
                .filter(|t| t.label == a && qs.contains(&t.src))
                .map(|t| t.dst)
                .collect();
            closure(nfa, &mut qs2);
            let pair = (rs2, qs2);
            if seen.insert(pair.clone()) {
                queue.push_back(pair);
            }
        }
    }
    true
}

/// Lengths of a longest common subsequence and a shortest common
/// supersequence, by the textbook quadratic table.
pub fn lcs_scs_dp(u: &[Symbol], v: &[Symbol]) -> (usize, usize) {
    let mut lcs = vec![vec![0usize; v.len() + 1]; u.len() + 1];
    let mut scs = vec![vec![0usize; v.len() + 1]; u.len() + 1];
    for i in 0..=u.len() {
        for j in 0..=v.len() {
            if i == 0 || j == 0 {
                scs[i][j] = i + j;
                continue;
            }
            if u[i - 1] == v[j - 1] {
                lcs[i][j] = lcs[i - 1][j - 1] + 1;
                scs[i][j] = scs[i - 1][j - 1] + 1;
            } else {
                lcs[i][j] = lcs[i - 1][j].max(lcs[i][j - 1]);
                scs[i][j] = scs[i - 1][j].min(scs[i][j - 1]) + 1;
            }
        }
    }
    let (p, q) = (lcs[u.len()][v.len()], scs[u.len()][v.len()]);
    assert_eq!(p + q, u.len() + v.len());
    (p, q)
}

/// Membership straight from the regex semantics: the set of end positions
/// reachable from each start position, star by fixpoint.
pub fn ast_accepts(ast: &RegexAst, word: &[Symbol]) -> bool {
    fn ends(ast: &RegexAst, word: &[Symbol], start: usize) -> BTreeSet<usize> {
        match ast {
            RegexAst::EmptySet => BTreeSet::new(),
            RegexAst::Epsilon => BTreeSet::from([start]),
            RegexAst::Literal(a) => {
                if word.get(start) == Some(a) {
                    BTreeSet::from([start + 1])
                } else {
                    BTreeSet::new()
                }
            }
            RegexAst::Concat(l, r) => ends(l, word, start)
                .into_iter()
                .flat_map(|mid| ends(r, word, mid))
                .collect(),
            RegexAst::Alt(l, r) => {
                let mut out = ends(l, word, start);
                out.extend(ends(r, word, start));
                out
            }
            RegexAst::Star(inner) => {
                let mut out = BTreeSet::from([start]);
                let mut frontier = vec![start];
                while let Some(p) = frontier.pop() {
                    for e in ends(inner, word, p) {
                        if out.insert(e) {
                            frontier.push(e);
                        }
                    }
                }
                out
            }
        }
    }
    ends(ast, word, 0).contains(&word.len())
}

/// Every string of length at most `max_len` over `1..=sigma`.
pub fn all_strings(sigma: u32, max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for_each_string(sigma, len, |u| out.push(u.to_vec()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::compile;

    #[test]
    fn enumerate_examples() {
        let prefixes = enumerate_relation(&[1, 2], RelationKind::Prefix, None, 2).unwrap();
        assert_eq!(prefixes, vec![vec![], vec![1], vec![1, 2]]);
        let subs = enumerate_relation(&[1, 2], RelationKind::Subsequence, None, 2).unwrap();
        assert_eq!(subs, vec![vec![], vec![1], vec![1, 2], vec![2]]);
        let sups = enumerate_relation(&[1], RelationKind::Supersequence, Some(3), 1).unwrap();
        assert_eq!(sups, vec![vec![1], vec![1, 1], vec![1, 1, 1]]);
        assert!(matches!(
            enumerate_relation(&[1], RelationKind::Extension, None, 1),
            Err(Error::MissingLengthBound("extension"))
        ));
    }

    #[test]
    fn enumeration_sizes() {
        let w = [1, 2, 1, 3, 1];
        assert_eq!(
            enumerate_relation(&w, RelationKind::Prefix, None, 3)
                .unwrap()
                .len(),
            6
        );
        assert!(
            enumerate_relation(&w, RelationKind::Infix, None, 3)
                .unwrap()
                .len()
                <= 16
        );
        assert!(
            enumerate_relation(&w, RelationKind::Subsequence, None, 3)
                .unwrap()
                .len()
                <= 32
        );
    }

    #[test]
    fn subsequence_and_supersequence_are_converse() {
        let strings = all_strings(2, 4);
        for u in &strings {
            for w in &strings {
                let sub = enumerate_relation(w, RelationKind::Subsequence, None, 2).unwrap();
                let sup =
                    enumerate_relation(u, RelationKind::Supersequence, Some(w.len()), 2).unwrap();
                assert_eq!(sub.contains(u), sup.contains(w), "{u:?} {w:?}");
            }
        }
    }

    #[test]
    fn quantitative_examples() {
        let (nfa, mut table) = compile("ab").unwrap();
        let ba = table.encode("ba");
        assert_eq!(
            brute_quantitative(&nfa, &ba, RelationKind::Subsequence, Mode::Min),
            LengthAnswer::NoMatch
        );
        assert_eq!(
            brute_quantitative(&nfa, &ba, RelationKind::Supersequence, Mode::Min),
            LengthAnswer::NoMatch
        );
        let (nfa, mut table) = compile("a|\\e").unwrap();
        let ba = table.encode("ba");
        assert_eq!(
            brute_quantitative(&nfa, &ba, RelationKind::Subsequence, Mode::Min),
            LengthAnswer::finite(vec![])
        );
        let (nfa, _) = compile("a").unwrap();
        assert_eq!(
            brute_quantitative(&nfa, &[1], RelationKind::Infix, Mode::Max),
            LengthAnswer::finite(vec![1])
        );
    }

    #[test]
    fn pumping_window_finds_long_minimum() {
        // the shortest supersequence of aaaaaa in (bbba)* has length 24
        let (nfa, mut table) = compile("(bbba)*").unwrap();
        let w = table.encode("aaaaaa");
        let answer = brute_quantitative(&nfa, &w, RelationKind::Supersequence, Mode::Min);
        assert_eq!(answer.length(), Some(24));
        assert_eq!(
            brute_quantitative(&nfa, &w, RelationKind::Supersequence, Mode::Max),
            LengthAnswer::Unbounded
        );
    }

    #[test]
    fn layered_witnesses_are_valid() {
        let (nfa, mut table) = compile("c(a|b)*c|ab").unwrap();
        for text in ["ab", "ba", "c", ""] {
            let w = table.encode(text);
            for rel in [
                RelationKind::Supersequence,
                RelationKind::Extension,
                RelationKind::LeftExtension,
            ] {
                if let Some(u) = brute_quantitative(&nfa, &w, rel, Mode::Min).witness() {
                    assert!(rel.holds(u, &w), "{rel} {text}");
                    assert!(crate::simulate::accepts(&nfa, u), "{rel} {text}");
                }
            }
        }
    }

    #[test]
    fn lcs_scs_examples() {
        assert_eq!(lcs_scs_dp(&[1, 2, 3], &[1, 2, 3]), (3, 3));
        assert_eq!(lcs_scs_dp(&[1], &[2]), (0, 2));
        // abcbdab / bdcaba
        let u = [1, 2, 3, 2, 4, 1, 2];
        let v = [2, 4, 3, 1, 2, 1];
        let (p, _) = lcs_scs_dp(&u, &v);
        let su = enumerate_relation(&u, RelationKind::Subsequence, None, 4).unwrap();
        let sv: BTreeSet<_> = enumerate_relation(&v, RelationKind::Subsequence, None, 4)
            .unwrap()
            .into_iter()
            .collect();
        let best = su.iter().filter(|s| sv.contains(*s)).map(|s| s.len()).max();
        assert_eq!(Some(p), best);
        assert_eq!(p, 4);
    }

    #[test]
    fn ast_semantics() {
        let (ast, mut table) = crate::regex::parse_regex("(a|b)*c").unwrap();
        assert!(ast_accepts(&ast, &table.encode("abbc")));
        assert!(!ast_accepts(&ast, &table.encode("abb")));
        let (ast, _) = crate::regex::parse_regex("(\\e)*").unwrap();
        assert!(ast_accepts(&ast, &[]));
    }
}
