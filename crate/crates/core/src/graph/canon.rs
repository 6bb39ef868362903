//! Canonical labeling by individualization and refinement.
//!
//! The ordered partition is refined to an equitable one (cells split by the
//! number of neighbors in each splitter cell, sub-cells ordered by that
//! count), then the first smallest non-singleton cell is individualized in
//! every possible way. Each discrete leaf gives a relabeled adjacency matrix
//! and the lexicographically smallest one is the canonical form. Branches
//! that differ only by swapping twin vertices are skipped, which is what keeps
//! cliques, independent sets and complete multipartite pieces cheap.

use super::{bit, graph6_encode, Bits, Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The canonically relabeled graph.
    pub graph: Graph,
    /// `order[i]` is the original vertex placed at position `i`.
    pub order: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search {
        adj: g.adjacency(),
        n,
        best: Vec::new(),
        best_order: Vec::new(),
        scratch: Vec::with_capacity(n),
    };
    search.run(vec![g.vertex_mask()]);
    CanonicalForm {
        graph: Graph::from_adjacency_unchecked(search.best),
        order: search.best_order,
    }
}

/// graph6 string of the canonical form; equal iff the graphs are isomorphic.
pub fn canonical_label(g: &Graph) -> String {
    graph6_encode(&canonical_form(g).graph)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).graph == canonical_form(b).graph
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Vec<u64>,
    best_order: Vec<usize>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>) {
        refine(self.adj, &mut cells, &mut self.scratch);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (ti, target) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried = 0u64;
        for v in Bits(target) {
            if Bits(tried).any(|u| self.twins(u, v)) {
                continue;
            }
            tried |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[ti + 1..]);
            self.run(child);
        }
    }

    #[inline]
    fn twins(&self, u: usize, v: usize) -> bool {
        (self.adj[u] ^ self.adj[v]) & !(bit(u) | bit(v)) == 0
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut position = [0usize; MAX_ORDER];
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| Bits(self.adj[v]).fold(0u64, |m, u| m | bit(position[u])))
            .collect();
        if self.best.is_empty() || rows < self.best {
            self.best = rows;
            self.best_order = order;
        }
    }
}

/// Refines an ordered partition (cells as vertex masks) to an equitable one.
fn refine(adj: &[u64], cells: &mut Vec<u64>, scratch: &mut Vec<u64>) {
    let n_total: u32 = cells.iter().map(|c| c.count_ones()).sum();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            if cells.len() as u32 == n_total {
                return;
            }
            let splitter = cells[s];
            scratch.clear();
            for &cell in cells.iter() {
                split_cell(adj, cell, splitter, scratch);
            }
            if scratch.len() != cells.len() {
                changed = true;
                std::mem::swap(cells, scratch);
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

#[inline]
fn split_cell(adj: &[u64], cell: u64, splitter: u64, out: &mut Vec<u64>) {
    if cell.count_ones() == 1 {
        out.push(cell);
        return;
    }
    let mut buckets = [0u64; MAX_ORDER + 1];
    let mut present = 0u128;
    for v in Bits(cell) {
        let c = (adj[v] & splitter).count_ones() as usize;
        buckets[c] |= bit(v);
        present |= 1u128 << c;
    }
    if present.count_ones() == 1 {
        out.push(cell);
        return;
    }
    while present != 0 {
        let c = present.trailing_zeros() as usize;
        out.push(buckets[c]);
        present &= present - 1;
    }
}
