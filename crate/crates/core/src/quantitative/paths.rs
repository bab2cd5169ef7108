use std::collections::VecDeque;

use crate::automaton::{Symbol, EPSILON};
use crate::graph::{strongly_connected_components, Csr};

use super::product::ProductGraph;

/// Result of a min/max query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LengthAnswer {
    NoMatch,
    Finite {
        length: usize,
        witness: Vec<Symbol>,
    },
    /// Matching strings exist with every length beyond some bound.
    Unbounded,
}

impl LengthAnswer {
    pub fn length(&self) -> Option<usize> {
        match self {
            LengthAnswer::Finite { length, .. } => Some(*length),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[Symbol]> {
        match self {
            LengthAnswer::Finite { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn is_match(&self) -> bool {
        !matches!(self, LengthAnswer::NoMatch)
    }

    pub fn finite(witness: Vec<Symbol>) -> Self {
        LengthAnswer::Finite {
            length: witness.len(),
            witness,
        }
    }
}

/// Vertices that lie on some source-to-target path.
pub fn useful_vertices(g: &ProductGraph) -> Vec<bool> {
    let n = g.num_vertices();
    let mut forward = vec![false; n];
    let mut stack = vec![g.source()];
    forward[g.source() as usize] = true;
    while let Some(v) = stack.pop() {
        for e in g.edge_range(v) {
            let h = g.head(e);
            if !forward[h as usize] {
                forward[h as usize] = true;
                stack.push(h);
            }
        }
    }
    if !forward[g.target() as usize] {
        return vec![false; n];
    }
    let tails = g.tails();
    let reverse = Csr::from_edges(n, (0..g.num_edges()).map(|e| (g.head(e), tails[e])));
    let mut useful = vec![false; n];
    stack.push(g.target());
    useful[g.target() as usize] = true;
    while let Some(v) = stack.pop() {
        for &p in reverse.successors(v) {
            if forward[p as usize] && !useful[p as usize] {
                useful[p as usize] = true;
                stack.push(p);
            }
        }
    }
    useful
}

/// Is the target reachable from the source?
pub fn st_reachable(g: &ProductGraph) -> bool {
    let mut seen = vec![false; g.num_vertices()];
    let mut stack = vec![g.source()];
    seen[g.source() as usize] = true;
    while let Some(v) = stack.pop() {
        if v == g.target() {
            return true;
        }
        for e in g.edge_range(v) {
            let h = g.head(e);
            if !seen[h as usize] {
                seen[h as usize] = true;
                stack.push(h);
            }
        }
    }
    false
}

const NONE: u32 = u32::MAX;

fn collect_labels(g: &ProductGraph, edges_back: impl Iterator<Item = usize>) -> Vec<Symbol> {
    let mut labels: Vec<Symbol> = Vec::new();
    for e in edges_back {
        if g.label(e) != EPSILON {
            labels.push(g.label(e));
        }
    }
    labels.reverse();
    labels
}

/// Minimum-weight source-to-target path.
///
/// Dijkstra with a bucket queue; for 0/1 weights only two buckets are live at
/// any time, which is a double-ended queue. O(|G|). Never `Unbounded`.
pub fn st_min_path(g: &ProductGraph) -> LengthAnswer {
    let useful = useful_vertices(g);
    if !useful[g.source() as usize] {
        return LengthAnswer::NoMatch;
    }
    let n = g.num_vertices();
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![NONE; n];
    let mut done = vec![false; n];
    let mut queue = VecDeque::new();
    dist[g.source() as usize] = 0;
    queue.push_back(g.source());
    while let Some(v) = queue.pop_front() {
        if done[v as usize] {
            continue;
        }
        done[v as usize] = true;
        if v == g.target() {
            break;
        }
        for e in g.edge_range(v) {
            let h = g.head(e);
            if !useful[h as usize] {
                continue;
            }
            let w = g.weight(e) as u32;
            let cand = dist[v as usize] + w;
            if cand < dist[h as usize] {
                dist[h as usize] = cand;
                parent[h as usize] = e as u32;
                if w == 0 {
                    queue.push_front(h);
                } else {
                    queue.push_back(h);
                }
            }
        }
    }

    let tails = g.tails();
    let mut cur = g.target();
    let back = std::iter::from_fn(|| {
        if cur == g.source() {
            return None;
        }
        let e = parent[cur as usize] as usize;
        cur = tails[e];
        Some(e)
    });
    let witness = collect_labels(g, back);
    debug_assert_eq!(witness.len(), dist[g.target() as usize] as usize);
    LengthAnswer::finite(witness)
}

/// Maximum-weight source-to-target path, or `Unbounded` when a strongly
/// connected part of the useful subgraph contains a weight-1 edge.
///
/// Otherwise every cycle has weight 0 and the longest path is computed by
/// dynamic programming over the condensation in topological order. O(|G|).
pub fn st_max_path(g: &ProductGraph) -> LengthAnswer {
    let useful = useful_vertices(g);
    if !useful[g.source() as usize] {
        return LengthAnswer::NoMatch;
    }
    let n = g.num_vertices();
    let tails = g.tails();
    let live_edges =
        || (0..g.num_edges()).filter(|&e| useful[tails[e] as usize] && useful[g.head(e) as usize]);
    let sub = Csr::from_edges(n, live_edges().map(|e| (tails[e], g.head(e))));
    let comps = strongly_connected_components(&sub);
    let comp = &comps.component_of;

    for e in live_edges() {
        if comp[tails[e] as usize] == comp[g.head(e) as usize] && g.weight(e) > 0 {
            return LengthAnswer::Unbounded;
        }
    }

    // bucket useful vertices by component; higher ids come first topologically
    let mut start = vec![0u32; comps.count + 1];
    for v in 0..n {
        if useful[v] {
            start[comp[v] as usize + 1] += 1;
        }
    }
    for c in 0..comps.count {
        start[c + 1] += start[c];
    }
    let mut fill = start.clone();
    let mut members = vec![0u32; start[comps.count] as usize];
    for v in 0..n {
        if useful[v] {
            let c = comp[v] as usize;
            members[fill[c] as usize] = v as u32;
            fill[c] += 1;
        }
    }

    let mut best = vec![i64::MIN; comps.count];
    let mut via = vec![NONE; comps.count];
    best[comp[g.source() as usize] as usize] = 0;
    for c in (0..comps.count).rev() {
        let here = best[c];
        if here == i64::MIN {
            continue;
        }
        for &v in &members[start[c] as usize..start[c + 1] as usize] {
            for e in g.edge_range(v) {
                let h = g.head(e) as usize;
                if !useful[h] || comp[h] as usize == c {
                    continue;
                }
                let cand = here + g.weight(e) as i64;
                let hc = comp[h] as usize;
                if cand > best[hc] {
                    best[hc] = cand;
                    via[hc] = e as u32;
                }
            }
        }
    }

    // intra-component edges all have weight 0 and label ε, so only the
    // inter-component edges contribute to the witness
    let source_comp = comp[g.source() as usize];
    let mut cur = comp[g.target() as usize];
    let back = std::iter::from_fn(|| {
        if cur == source_comp {
            return None;
        }
        let e = via[cur as usize] as usize;
        cur = comp[tails[e] as usize];
        Some(e)
    });
    let witness = collect_labels(g, back);
    debug_assert_eq!(
        witness.len() as i64,
        best[comp[g.target() as usize] as usize]
    );
    LengthAnswer::finite(witness)
}
