//! Compressed adjacency and strongly connected components.

/// Compressed sparse row adjacency: successors of `v` are
/// `targets[offsets[v]..offsets[v + 1]]`.
#[derive(Debug, Clone, Default)]
pub struct Csr {
    pub offsets: Vec<u32>,
    pub targets: Vec<u32>,
}

impl Csr {
    /// Edges are given as (from, to) pairs; per-vertex order follows input order.
    pub fn from_edges(
        num_vertices: usize,
        edges: impl Iterator<Item = (u32, u32)> + Clone,
    ) -> Self {
        let mut offsets = vec![0u32; num_vertices + 1];
        for (from, _) in edges.clone() {
            offsets[from as usize + 1] += 1;
        }
        for i in 0..num_vertices {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[num_vertices] as usize];
        for (from, to) in edges {
            targets[fill[from as usize] as usize] = to;
            fill[from as usize] += 1;
        }
        Csr { offsets, targets }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn successors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }
}

/// SCC labelling. Component ids follow Tarjan's completion order, so every
/// edge between distinct components goes from a higher id to a lower one.
#[derive(Debug, Clone)]
pub struct Components {
    pub component_of: Vec<u32>,
    pub count: usize,
}

const UNVISITED: u32 = u32::MAX;

/// Iterative Tarjan, O(V + E), no recursion.
pub fn strongly_connected_components(graph: &Csr) -> Components {
    let n = graph.num_vertices();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut component_of = vec![UNVISITED; n];
    let mut frames: Vec<(u32, u32)> = Vec::new();
    let mut next_index = 0u32;
    let mut count = 0u32;

    for root in 0..n as u32 {
        if index[root as usize] != UNVISITED {
            continue;
        }
        index[root as usize] = next_index;
        lowlink[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        frames.push((root, graph.offsets[root as usize]));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let end = graph.offsets[v as usize + 1];
            if frame.1 < end {
                let w = graph.targets[frame.1 as usize];
                frame.1 += 1;
                if index[w as usize] == UNVISITED {
                    index[w as usize] = next_index;
                    lowlink[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, graph.offsets[w as usize]));
                } else if on_stack[w as usize] {
                    lowlink[v as usize] = lowlink[v as usize].min(index[w as usize]);
                }
                continue;
            }
            frames.pop();
            if lowlink[v as usize] == index[v as usize] {
                loop {
                    let w = stack.pop().expect("v is on the stack");
                    on_stack[w as usize] = false;
                    component_of[w as usize] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
            if let Some(parent) = frames.last() {
                let p = parent.0 as usize;
                lowlink[p] = lowlink[p].min(lowlink[v as usize]);
            }
        }
    }

    Components {
        component_of,
        count: count as usize,
    }
}

/// Vertices reachable from `start` (inclusive).
pub fn reachable_from(graph: &Csr, start: u32) -> Vec<bool> {
    let mut seen = vec![false; graph.num_vertices()];
    let mut stack = vec![start];
    seen[start as usize] = true;
    while let Some(v) = stack.pop() {
        for &w in graph.successors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Kahn's algorithm; `None` if the graph has a cycle. Self-loops are ignored.
pub fn topological_order(graph: &Csr) -> Option<Vec<u32>> {
    let n = graph.num_vertices();
    let mut indeg = vec![0u32; n];
    for v in 0..n as u32 {
        for &w in graph.successors(v) {
            if w != v {
                indeg[w as usize] += 1;
            }
        }
    }
    let mut order: Vec<u32> = (0..n as u32).filter(|&v| indeg[v as usize] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in graph.successors(v) {
            if w != v {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    order.push(w);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}
