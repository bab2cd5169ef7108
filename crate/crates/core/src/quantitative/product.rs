use crate::automaton::{ENfa, State, Symbol, TransitionIndex, EPSILON};
use crate::relation::RelationKind;

/// Where a product-graph vertex comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// `(i, q)`: state `q` after consuming `w[..i]`.
    Base { position: usize, state: State },
    /// Extra source for the infix relation.
    Source,
    /// Extra target for the infix and prefix relations.
    Target,
    /// Automaton copy read before the text (extension relations).
    Before(State),
    /// Automaton copy read after the text (extension relation).
    After(State),
}

/// Weighted, labelled graph whose source-to-target paths spell exactly the
/// strings `u ⪯ w` accepted by the automaton. Path weight equals `|u|`.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    num_states: usize,
    text_len: usize,
    relation: RelationKind,
    num_vertices: usize,
    source: u32,
    target: u32,
    offsets: Vec<u32>,
    heads: Vec<u32>,
    labels: Vec<Symbol>,
    weights: Vec<u8>,
}

struct EdgeList {
    from: Vec<u32>,
    to: Vec<u32>,
    label: Vec<Symbol>,
}

impl EdgeList {
    #[inline]
    fn push(&mut self, from: u32, to: u32, label: Symbol) {
        self.from.push(from);
        self.to.push(to);
        self.label.push(label);
    }
}

impl ProductGraph {
    /// A plain graph from `(from, to, label)` triples; ε-labelled edges get
    /// weight 0, all others weight 1. Every vertex reports as a base vertex
    /// in column 0.
    pub fn from_edges(
        num_vertices: usize,
        source: u32,
        target: u32,
        edges: &[(u32, u32, Symbol)],
    ) -> Self {
        let mut list = EdgeList {
            from: Vec::new(),
            to: Vec::new(),
            label: Vec::new(),
        };
        for &(f, t, l) in edges {
            list.push(f, t, l);
        }
        ProductGraph::assemble(num_vertices, source, target, &list)
    }

    fn assemble(num_vertices: usize, source: u32, target: u32, edges: &EdgeList) -> Self {
        // counting sort by tail
        let m = edges.from.len();
        let mut offsets = vec![0u32; num_vertices + 1];
        for &f in &edges.from {
            offsets[f as usize + 1] += 1;
        }
        for v in 0..num_vertices {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut heads = vec![0u32; m];
        let mut labels = vec![0; m];
        let mut weights = vec![0u8; m];
        for e in 0..m {
            let slot = fill[edges.from[e] as usize] as usize;
            fill[edges.from[e] as usize] += 1;
            heads[slot] = edges.to[e];
            labels[slot] = edges.label[e];
            weights[slot] = u8::from(edges.label[e] != EPSILON);
        }
        ProductGraph {
            num_states: num_vertices.max(1),
            text_len: 0,
            relation: RelationKind::Equality,
            num_vertices,
            source,
            target,
            offsets,
            heads,
            labels,
            weights,
        }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.heads.len()
    }

    #[inline]
    pub fn source(&self) -> u32 {
        self.source
    }

    #[inline]
    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn relation(&self) -> RelationKind {
        self.relation
    }

    /// Id of base vertex `(position, state)`.
    #[inline]
    pub fn base_vertex(&self, position: usize, state: State) -> u32 {
        (position * self.num_states + state as usize) as u32
    }

    pub fn kind(&self, v: u32) -> VertexKind {
        let n = self.num_states;
        let base = (self.text_len + 1) * n;
        let v = v as usize;
        if v < base {
            return VertexKind::Base {
                position: v / n,
                state: (v % n) as State,
            };
        }
        let aux = v - base;
        match self.relation {
            RelationKind::Infix if aux == 0 => VertexKind::Source,
            RelationKind::Infix | RelationKind::Prefix => VertexKind::Target,
            RelationKind::LeftExtension | RelationKind::Extension if aux < n => {
                VertexKind::Before(aux as State)
            }
            RelationKind::Extension => VertexKind::After((aux - n) as State),
            _ => unreachable!("no auxiliary vertices for {}", self.relation),
        }
    }

    /// Edge ids leaving `v`.
    #[inline]
    pub fn edge_range(&self, v: u32) -> std::ops::Range<usize> {
        self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize
    }

    #[inline]
    pub fn head(&self, edge: usize) -> u32 {
        self.heads[edge]
    }

    #[inline]
    pub fn label(&self, edge: usize) -> Symbol {
        self.labels[edge]
    }

    #[inline]
    pub fn weight(&self, edge: usize) -> u8 {
        self.weights[edge]
    }

    /// Tail vertex of every edge, indexed by edge id.
    pub fn tails(&self) -> Vec<u32> {
        let mut tails = vec![0u32; self.num_edges()];
        for v in 0..self.num_vertices as u32 {
            for e in self.edge_range(v) {
                tails[e] = v;
            }
        }
        tails
    }
}

/// Build the product graph of `nfa` and `word` for `relation`, O(|w| m).
///
/// Base vertices `(i, q)` for `i ∈ 0..=|w|` carry an ε-edge per ε-transition
/// inside each column and a `w[i]`-edge per matching transition between
/// columns `i - 1` and `i`. Each relation then adds its own edges:
///
/// * prefix: a target fed by every `(i, qf)`;
/// * infix: additionally a source feeding every `(i, q0)`;
/// * left-extension: a copy of the automaton leading into column 0;
/// * extension: a second copy leaving column `|w|`;
/// * subsequence: weight-0 ε-edges `(i, q) → (i + 1, q)` that skip a text symbol;
/// * supersequence: for every symbol transition, a weight-1 edge inside each
///   column that inserts that symbol.
///
/// Symbol-labelled edges have weight 1, ε-edges weight 0.
pub fn build_product_graph(nfa: &ENfa, word: &[Symbol], relation: RelationKind) -> ProductGraph {
    let n = nfa.num_states();
    let len = word.len();
    let index = TransitionIndex::new(nfa);
    let columns = len + 1;
    let base = columns * n;
    let at = |i: usize, q: State| (i * n + q as usize) as u32;
    let (q0, qf) = (nfa.initial(), nfa.final_state());

    let mut edges = EdgeList {
        from: Vec::new(),
        to: Vec::new(),
        label: Vec::new(),
    };
    let eps: Vec<_> = nfa
        .transitions()
        .iter()
        .filter(|t| t.is_epsilon())
        .copied()
        .collect();
    for i in 0..columns {
        for t in &eps {
            edges.push(at(i, t.src), at(i, t.dst), EPSILON);
        }
    }
    for (i, &a) in word.iter().enumerate() {
        for q in 0..n as State {
            for t in index.labelled(q, a) {
                if a != EPSILON {
                    edges.push(at(i, t.src), at(i + 1, t.dst), a);
                }
            }
        }
    }

    let (num_vertices, source, target) = match relation {
        RelationKind::Equality => (base, at(0, q0), at(len, qf)),
        RelationKind::Prefix => {
            let t = base as u32;
            for i in 0..columns {
                edges.push(at(i, qf), t, EPSILON);
            }
            (base + 1, at(0, q0), t)
        }
        RelationKind::Infix => {
            let (s, t) = (base as u32, base as u32 + 1);
            for i in 0..columns {
                edges.push(s, at(i, q0), EPSILON);
                edges.push(at(i, qf), t, EPSILON);
            }
            (base + 2, s, t)
        }
        RelationKind::LeftExtension | RelationKind::Extension => {
            let before = |q: State| (base + q as usize) as u32;
            let after = |q: State| (base + n + q as usize) as u32;
            for tr in nfa.transitions() {
                edges.push(before(tr.src), before(tr.dst), tr.label);
            }
            for q in 0..n as State {
                edges.push(before(q), at(0, q), EPSILON);
            }
            if relation == RelationKind::LeftExtension {
                (base + n, before(q0), at(len, qf))
            } else {
                for tr in nfa.transitions() {
                    edges.push(after(tr.src), after(tr.dst), tr.label);
                }
                for q in 0..n as State {
                    edges.push(at(len, q), after(q), EPSILON);
                }
                (base + 2 * n, before(q0), after(qf))
            }
        }
        RelationKind::Subsequence => {
            for i in 0..len {
                for q in 0..n as State {
                    edges.push(at(i, q), at(i + 1, q), EPSILON);
                }
            }
            (base, at(0, q0), at(len, qf))
        }
        RelationKind::Supersequence => {
            // one extra edge per symbol transition, so every inserted label
            // is available to the witness
            for i in 0..columns {
                for tr in nfa.transitions().iter().filter(|t| !t.is_epsilon()) {
                    edges.push(at(i, tr.src), at(i, tr.dst), tr.label);
                }
            }
            (base, at(0, q0), at(len, qf))
        }
    };

    let mut graph = ProductGraph::assemble(num_vertices, source, target, &edges);
    graph.num_states = n;
    graph.text_len = len;
    graph.relation = relation;
    graph
}
