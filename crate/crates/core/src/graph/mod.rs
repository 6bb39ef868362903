//! Simple undirected graphs of order at most 64 with bitset adjacency.
//!
//! Every vertex neighborhood is a single `u64`, so counting the neighbors of a
//! vertex inside a vertex set is one `popcount`.

mod canon;
mod edgelist;
mod graph6;
mod paths;
mod predicates;

pub use canon::{canonical_form, canonical_label, is_isomorphic, CanonicalForm};
pub use edgelist::{format_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use paths::{induced_cycles, induced_paths, induced_paths_between};
pub use predicates::{has_induced_p4, is_claw_free, is_cograph, is_cubic, is_tree};

use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("graph is disconnected")]
    Disconnected,
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Mask of all vertex ids strictly greater than `v`.
#[inline]
pub(crate) const fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A subset of the vertices of a graph of order `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        VertexSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            bits: low_mask(n),
        }
    }

    /// Builds a set from a raw mask; bits at or above `n` are rejected.
    pub fn from_mask(n: usize, bits: u64) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        if bits & !low_mask(n) != 0 {
            let vertex = (bits & !low_mask(n)).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
        Ok(VertexSet { n, bits })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Result<Self, GraphError> {
        let mut s = VertexSet::empty(n);
        for v in vs {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            s.bits |= bit(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.bits |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits &= !bit(v);
        }
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            n: self.n,
            bits: !self.bits & low_mask(self.n),
        }
    }

    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Characteristic 0/1 vector of length `n`.
    pub fn indicator(&self) -> Vec<u8> {
        (0..self.n).map(|v| u8::from(self.contains(v))).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Degree summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    /// Number of vertices of degree one.
    pub leaves: usize,
    pub sequence: Vec<usize>,
}

/// Immutable simple undirected graph on vertices `0..n`, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    /// Builds a graph from neighbor masks, validating symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        for (v, &row) in adj.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                let vertex = (row & !low_mask(n)).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::Loop(v));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Skips validation; callers guarantee the adjacency invariants.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Open neighborhood of `v` as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood of `v` as a mask.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & above(u)).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Number of vertices of degree one.
    pub fn leaf_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats {
            max: sequence.iter().copied().max().unwrap_or(0),
            min: sequence.iter().copied().min().unwrap_or(0),
            leaves: sequence.iter().filter(|&&d| d == 1).count(),
            sequence,
        }
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        (0..self.n)
            .filter(|&v| self.adj[v] | bit(v) == all)
            .fold(0, |m, v| m | bit(v))
    }

    pub fn isolated_vertices(&self) -> u64 {
        (0..self.n).filter(|&v| self.adj[v] == 0).fold(0, |m, v| m | bit(v))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        components_within(&self.adj, self.vertex_mask())
    }

    /// Hop distance between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(dist[x]);
            }
            for y in Bits(self.adj[x]) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Err(GraphError::Disconnected)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    fn union_parts(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        let first = low_mask(self.n);
        let second = low_mask(n) & !first;
        let mut adj = Vec::with_capacity(n);
        for &row in &self.adj {
            adj.push(row | if cross { second } else { 0 });
        }
        for &row in &other.adj {
            adj.push((row << self.n) | if cross { first } else { 0 });
        }
        Ok(Graph { n, adj })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.union_parts(other, false)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.union_parts(other, true)
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in increasing order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        self.induced_by_mask(set.mask() & self.vertex_mask())
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Result<Graph, GraphError> {
        if mask == 0 {
            return Err(GraphError::EmptySubset);
        }
        let kept: Vec<usize> = Bits(mask).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| Bits(self.adj[v] & mask).fold(0u64, |m, u| m | bit(index[u])))
            .collect();
        Ok(Graph { n: kept.len(), adj })
    }

    /// Relabels so that old vertex `perm[i]` becomes vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut inverse = [0usize; MAX_ORDER];
        for (i, &v) in perm.iter().enumerate() {
            inverse[v] = i;
        }
        let adj = perm
            .iter()
            .map(|&v| Bits(self.adj[v]).fold(0u64, |m, u| m | bit(inverse[u])))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Copy of this graph with one new vertex `n` adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        if neighbors & !self.vertex_mask() != 0 {
            let vertex = (neighbors & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
        }
        let mut adj = self.adj.clone();
        for u in Bits(neighbors) {
            adj[u] |= bit(self.n);
        }
        adj.push(neighbors);
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", format_edge_list(self))
    }
}

/// Connected components of the subgraph induced by `within`.
pub(crate) fn components_within(adj: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        out.push(seen);
        left &= !seen;
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    pub fn bull() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn build_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_c4_and_single_vertex() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!((c4.max_degree(), c4.min_degree()), (2, 2));
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.max_degree(), 0);
        assert!(k1.is_connected());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, &[]), Err(GraphError::BadOrder(0)));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::BadOrder(65)));
        assert_eq!(Graph::from_adjacency(vec![0b10, 0]), Err(GraphError::Asymmetric(0, 1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn degree_stats_examples() {
        let star = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let s = star.degree_stats();
        assert_eq!((s.max, s.min, s.leaves), (5, 1, 5));
        let s = cycle(7).degree_stats();
        assert_eq!((s.max, s.min, s.leaves), (2, 2, 0));
        let s = bull().degree_stats();
        assert_eq!((s.max, s.min, s.leaves), (3, 1, 2));
    }

    #[test]
    fn connectivity() {
        assert!(complete(4).is_connected());
        let k2 = complete(2);
        assert!(!k2.disjoint_union(&k2).unwrap().is_connected());
        assert!(path(6).is_connected());
        assert_eq!(k2.disjoint_union(&k2).unwrap().components(), vec![0b0011, 0b1100]);
    }

    #[test]
    fn operators() {
        let e2 = Graph::empty(2).unwrap();
        let c4 = e2.join(&e2).unwrap();
        assert!(is_isomorphic(&c4, &cycle(4)));

        let g = path(4).join(&e2).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.max_degree(), 4);

        let p5 = path(5);
        assert_eq!(p5.complement().complement(), p5);

        let sub = cycle(6).induced_subgraph(&VertexSet::from_vertices(6, [0, 1, 2]).unwrap()).unwrap();
        assert_eq!(sub, path(3));
        assert_eq!(
            cycle(6).induced_subgraph(&VertexSet::empty(6)),
            Err(GraphError::EmptySubset)
        );
    }

    #[test]
    fn join_keeps_parts_and_adds_all_cross_edges() {
        let a = path(3);
        let b = cycle(4);
        let j = a.join(&b).unwrap();
        assert_eq!(j.order(), 7);
        for u in 0..3 {
            for v in 3..7 {
                assert!(j.has_edge(u, v));
            }
        }
        assert_eq!(j.induced_by_mask(0b111).unwrap(), a);
        assert_eq!(j.induced_by_mask(0b1111000).unwrap(), b);
    }

    #[test]
    fn distances() {
        let c6 = cycle(6);
        assert_eq!(c6.distance(0, 3), Ok(3));
        assert_eq!(c6.distance(0, 1), Ok(1));
        assert_eq!(bull().distance(3, 4), Ok(3));
        let k2 = complete(2);
        let split = k2.disjoint_union(&k2).unwrap();
        assert_eq!(split.distance(0, 1), Err(GraphError::Disconnected));
    }

    #[test]
    fn with_vertex_appends() {
        let g = path(3).with_vertex(0b101).unwrap();
        assert_eq!(g, cycle(4));
    }

    #[test]
    fn universal_and_isolated() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.universal_vertices(), 1);
        assert_eq!(star.isolated_vertices(), 0);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.universal_vertices(), 1);
        assert_eq!(k1.isolated_vertices(), 1);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(5);
        s.insert(3);
        s.insert(1);
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert_eq!(s.indicator(), vec![0, 1, 0, 1, 0]);
        assert_eq!(s.to_string(), "{1,3}");
        assert!(VertexSet::from_mask(3, 0b1000).is_err());
        assert!(VertexSet::from_vertices(3, [3]).is_err());
    }

    use proptest::prelude::*;

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for v in 1..n {
                    for u in 0..v {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn handshake(g in arb_graph()) {
            let total: usize = g.degree_stats().sequence.iter().sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn complement_is_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            let n = g.order();
            prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
        }
    }
}
