//! Exhaustive generation of connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves
//! it connected, so the classes of order `n` are exactly the canonical forms
//! of the order-`(n−1)` classes extended by one vertex with a non-empty
//! neighborhood. Properties inherited by connected induced subgraphs (a
//! degree cap, claw-freeness, being a cograph, being a tree) are enforced on
//! every level; the rest are checked on the final graphs only.

use crate::domination::{domination_number, min_quasiperfect, SolveError};
use crate::graph::{canonical_form, graph6_encode, is_claw_free, is_cograph, Graph};
use crate::par::Exec;
use serde::Serialize;
use std::collections::HashSet;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Largest order for an enumeration without pruning filters.
pub const MAX_UNFILTERED_ORDER: usize = 9;
/// Largest order when a filter prunes during generation.
pub const MAX_FILTERED_ORDER: usize = 10;
/// Largest order for [`witness_search`].
pub const MAX_WITNESS_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} is outside 1..={cap} for this request")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Conjunction of conditions on connected graphs of one order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GraphFilter {
    pub order: usize,
    /// Exact maximum degree.
    pub max_degree: Option<usize>,
    /// Exact domination number.
    pub gamma: Option<usize>,
    /// Upper bound on the number of degree-1 vertices.
    pub max_leaves: Option<usize>,
    /// Exact number of degree-1 vertices.
    pub leaves: Option<usize>,
    pub claw_free: bool,
    pub cograph: bool,
    pub cubic: bool,
    pub tree: bool,
}

impl GraphFilter {
    pub fn new(order: usize) -> Self {
        GraphFilter {
            order,
            ..Default::default()
        }
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn with_gamma(mut self, g: usize) -> Self {
        self.gamma = Some(g);
        self
    }

    pub fn with_max_leaves(mut self, l: usize) -> Self {
        self.max_leaves = Some(l);
        self
    }

    pub fn with_leaves(mut self, l: usize) -> Self {
        self.leaves = Some(l);
        self
    }

    pub fn claw_free(mut self) -> Self {
        self.claw_free = true;
        self
    }

    pub fn cograph(mut self) -> Self {
        self.cograph = true;
        self
    }

    pub fn cubic(mut self) -> Self {
        self.cubic = true;
        self
    }

    pub fn tree(mut self) -> Self {
        self.tree = true;
        self
    }

    /// Whether some condition cuts the search before the last level.
    pub fn prunes(&self) -> bool {
        self.max_degree.is_some() || self.claw_free || self.cograph || self.cubic || self.tree
    }

    fn degree_cap(&self) -> Option<usize> {
        match (self.max_degree, self.cubic) {
            (Some(d), true) => Some(d.min(3)),
            (Some(d), false) => Some(d),
            (None, true) => Some(3),
            (None, false) => None,
        }
    }

    /// Conditions that survive deleting a vertex (connectivity kept).
    fn hereditary(&self, g: &Graph) -> bool {
        self.degree_cap().map_or(true, |d| g.max_degree() <= d)
            && (!self.claw_free || is_claw_free(g))
            && (!self.cograph || is_cograph(g))
            && (!self.tree || g.edge_count() + 1 == g.order())
    }

    /// Every condition except the domination number.
    fn structural(&self, g: &Graph) -> bool {
        let leaves = g.leaf_count();
        g.order() == self.order
            && g.is_connected()
            && self.hereditary(g)
            && self.max_degree.map_or(true, |d| g.max_degree() == d)
            && self.max_leaves.map_or(true, |l| leaves <= l)
            && self.leaves.map_or(true, |l| leaves == l)
            && (!self.cubic || (g.min_degree() == 3 && g.max_degree() == 3))
    }

    /// Checks every condition directly on `g`.
    pub fn matches(&self, g: &Graph) -> Result<bool, SolveError> {
        if !self.structural(g) {
            return Ok(false);
        }
        match self.gamma {
            Some(t) => Ok(domination_number(g)?.value == t),
            None => Ok(true),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationReport {
    pub filter: GraphFilter,
    pub count: usize,
    /// Canonical representatives, sorted by label.
    #[serde(skip)]
    pub graphs: Vec<Graph>,
    /// graph6 of each representative.
    #[serde(skip)]
    pub labels: Vec<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// All classes matching `filter`, in label order; `sink` sees each one in
/// that order on the calling thread.
pub fn enumerate(
    filter: &GraphFilter,
    exec: Exec,
    sink: &mut dyn FnMut(&Graph, &str),
) -> Result<EnumerationReport, EnumerateError> {
    let start = Instant::now();
    let n = filter.order;
    let cap = if filter.prunes() {
        MAX_FILTERED_ORDER
    } else {
        MAX_UNFILTERED_ORDER
    };
    if n == 0 || n > cap {
        return Err(EnumerateError::TooLarge { n, cap });
    }
    let candidates = generate(filter, n, exec).pop().unwrap_or_default();
    let kept: Vec<Result<Option<(String, Graph)>, SolveError>> = exec.map(&candidates, |g| {
        Ok(filter.matches(g)?.then(|| (graph6_encode(g), g.clone())))
    });
    let mut found = Vec::with_capacity(kept.len());
    for k in kept {
        if let Some(item) = k? {
            found.push(item);
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let (labels, graphs): (Vec<String>, Vec<Graph>) = found.into_iter().unzip();
    for (g, l) in graphs.iter().zip(&labels) {
        sink(g, l);
    }
    Ok(EnumerationReport {
        filter: filter.clone(),
        count: graphs.len(),
        graphs,
        labels,
        elapsed: start.elapsed(),
    })
}

/// Every connected class of order `1..=n_max`; entry `i` holds order `i + 1`,
/// each level sorted by label.
pub fn connected_graphs_up_to(n_max: usize, exec: Exec) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    if n_max == 0 || n_max > MAX_UNFILTERED_ORDER {
        return Err(EnumerateError::TooLarge {
            n: n_max,
            cap: MAX_UNFILTERED_ORDER,
        });
    }
    let mut levels = generate(&GraphFilter::default(), n_max, exec);
    for level in &mut levels {
        sort_by_label(level);
    }
    Ok(levels)
}

/// All classes of order `n`, connected or not, sorted by label. A graph or
/// its complement is always connected.
pub fn all_graphs(n: usize, exec: Exec) -> Result<Vec<Graph>, EnumerateError> {
    let connected = connected_graphs_up_to(n, exec)?.pop().unwrap_or_default();
    let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(2 * connected.len());
    let mut out = Vec::with_capacity(2 * connected.len());
    for g in connected.iter().cloned().chain(connected.iter().map(|g| canonical_form(&g.complement()).graph)) {
        if seen.insert(g.adjacency().to_vec()) {
            out.push(g);
        }
    }
    sort_by_label(&mut out);
    Ok(out)
}

fn sort_by_label(graphs: &mut [Graph]) {
    graphs.sort_by_cached_key(graph6_encode);
}

/// Levels `1..=n` of canonical connected graphs passing the hereditary
/// part of `filter`, unsorted.
fn generate(filter: &GraphFilter, n: usize, exec: Exec) -> Vec<Vec<Graph>> {
    let cap = filter.degree_cap();
    let mut levels = vec![vec![Graph::empty(1).expect("order 1")]];
    for _ in 1..n {
        let parents = levels.last().unwrap();
        let children: Vec<Vec<Graph>> = exec.map(parents, |p| extend(p, filter, cap));
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut level = Vec::new();
        for g in children.into_iter().flatten() {
            if seen.insert(g.adjacency().to_vec()) {
                level.push(g);
            }
        }
        levels.push(level);
    }
    levels
}

/// Canonical forms of one-vertex extensions of `p`, deduplicated locally.
fn extend(p: &Graph, filter: &GraphFilter, cap: Option<usize>) -> Vec<Graph> {
    let m = p.order();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let mut consider = |nb: u64| {
        if let Some(d) = cap {
            if nb.count_ones() as usize > d || crate::graph::Bits(nb).any(|u| p.degree(u) >= d) {
                return;
            }
        }
        let child = p.with_vertex(nb).expect("order below the cap");
        if !filter.hereditary(&child) {
            return;
        }
        let canon = canonical_form(&child).graph;
        if seen.insert(canon.adjacency().to_vec()) {
            out.push(canon);
        }
    };
    if filter.tree {
        (0..m).for_each(|u| consider(1u64 << u));
    } else {
        (1u64..1 << m).for_each(&mut consider);
    }
    out
}

/// Parameters available to a [`witness_search`] predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphParams {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub leaves: usize,
    pub gamma: usize,
    pub gamma_11: usize,
    pub claw_free: bool,
    pub cograph: bool,
}

impl GraphParams {
    pub fn of(g: &Graph) -> Result<Self, SolveError> {
        let stats = g.degree_stats();
        Ok(GraphParams {
            n: g.order(),
            max_degree: stats.max,
            min_degree: stats.min,
            leaves: stats.leaves,
            gamma: domination_number(g)?.value,
            gamma_11: min_quasiperfect(g, 1)?.value,
            claw_free: is_claw_free(g),
            cograph: is_cograph(g),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// The first matching class in label order.
    Found { graph: Graph, params: GraphParams, examined: usize },
    /// Every class passing the filter was checked.
    Absent { examined: usize },
}

impl WitnessOutcome {
    pub fn witness(&self) -> Option<&Graph> {
        match self {
            WitnessOutcome::Found { graph, .. } => Some(graph),
            WitnessOutcome::Absent { .. } => None,
        }
    }

    pub fn examined(&self) -> usize {
        match *self {
            WitnessOutcome::Found { examined, .. } | WitnessOutcome::Absent { examined } => examined,
        }
    }
}

/// Searches the classes passing `filter` for one whose parameters satisfy
/// `pred`; absence is reported only after all of them were checked.
pub fn witness_search<P>(filter: &GraphFilter, pred: P, exec: Exec) -> Result<WitnessOutcome, EnumerateError>
where
    P: Fn(&GraphParams) -> bool + Sync + Send,
{
    if filter.order == 0 || filter.order > MAX_WITNESS_ORDER {
        return Err(EnumerateError::TooLarge {
            n: filter.order,
            cap: MAX_WITNESS_ORDER,
        });
    }
    let report = enumerate(filter, exec, &mut |_, _| {})?;
    let hit = exec.find_map_first(&report.graphs, |g| match GraphParams::of(g) {
        Ok(p) if pred(&p) => Some(Ok((g.clone(), p))),
        Ok(_) => None,
        Err(e) => Some(Err(e)),
    });
    Ok(match hit {
        Some(found) => {
            let (graph, params) = found?;
            WitnessOutcome::Found {
                graph,
                params,
                examined: report.count,
            }
        }
        None => WitnessOutcome::Absent { examined: report.count },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_label, has_induced_p4};

    /// Classes of connected graphs by brute force over all edge subsets.
    fn naive_classes(n: usize) -> Vec<String> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut labels: Vec<String> = (0u64..1 << pairs.len())
            .filter_map(|m| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::new(n, &edges).unwrap();
                g.is_connected().then(|| canonical_label(&g))
            })
            .collect();
        labels.sort();
        labels.dedup();
        labels
    }

    fn count(filter: GraphFilter) -> usize {
        enumerate(&filter, Exec::Parallel, &mut |_, _| {}).unwrap().count
    }

    #[test]
    fn connected_counts() {
        let levels = connected_graphs_up_to(7, Exec::Parallel).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(count(GraphFilter::new(4)), 6);
    }

    #[test]
    fn matches_naive_oracle() {
        let levels = connected_graphs_up_to(6, Exec::Sequential).unwrap();
        for n in 1..=6 {
            let mut labels: Vec<String> = levels[n - 1].iter().map(graph6_encode).collect();
            labels.sort();
            assert_eq!(labels, naive_classes(n), "order {n}");
        }
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n, Exec::Parallel).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn representatives_are_distinct_and_sorted() {
        let mut seen = Vec::new();
        let r = enumerate(&GraphFilter::new(6), Exec::Parallel, &mut |g, l| {
            assert_eq!(graph6_encode(g), l);
            seen.push(l.to_string());
        })
        .unwrap();
        assert_eq!(seen, r.labels);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let mut canon: Vec<String> = r.graphs.iter().map(canonical_label).collect();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), r.count);
    }

    #[test]
    fn pruned_filters_agree_with_post_hoc_filtering() {
        let level = connected_graphs_up_to(7, Exec::Parallel).unwrap().pop().unwrap();
        let filters = [
            GraphFilter::new(7).with_max_degree(3),
            GraphFilter::new(7).claw_free(),
            GraphFilter::new(7).cograph(),
            GraphFilter::new(7).tree(),
            GraphFilter::new(7).with_max_degree(4).with_gamma(3).with_max_leaves(2),
            GraphFilter::new(7).with_leaves(0).with_max_degree(4),
        ];
        for f in filters {
            let direct = enumerate(&f, Exec::Parallel, &mut |_, _| {}).unwrap();
            let post = level.iter().filter(|g| f.matches(g).unwrap()).count();
            assert_eq!(direct.count, post, "{f:?}");
            for g in &direct.graphs {
                assert!(f.matches(g).unwrap());
            }
        }
        // cographs are exactly the P4-free graphs
        let cographs = level.iter().filter(|g| is_cograph(g)).count();
        assert_eq!(cographs, level.iter().filter(|g| !has_induced_p4(g)).count());
    }

    #[test]
    fn small_filtered_counts() {
        assert_eq!(count(GraphFilter::new(5).with_max_degree(3)), 8);
        assert_eq!(count(GraphFilter::new(6).cubic()), 2);
        assert_eq!(count(GraphFilter::new(8).cubic()), 5);
        // trees on 7 vertices: 11
        assert_eq!(count(GraphFilter::new(7).tree()), 11);
        assert_eq!(count(GraphFilter::new(10).tree()), 106);
    }

    #[test]
    fn limits() {
        assert_eq!(
            enumerate(&GraphFilter::new(10), Exec::Sequential, &mut |_, _| {}).unwrap_err(),
            EnumerateError::TooLarge { n: 10, cap: 9 }
        );
        assert!(enumerate(&GraphFilter::new(0), Exec::Sequential, &mut |_, _| {}).is_err());
        assert!(matches!(
            witness_search(&GraphFilter::new(9).claw_free(), |_| true, Exec::Sequential),
            Err(EnumerateError::TooLarge { cap: 8, .. })
        ));
        // contradictory filters are simply empty
        assert_eq!(count(GraphFilter::new(5).with_max_degree(2).with_leaves(4)), 0);
    }

    #[test]
    fn witness_examples() {
        let f = GraphFilter::new(5).with_max_degree(3);
        let out = witness_search(&f, |p| p.gamma_11 == 4, Exec::Parallel).unwrap();
        assert_eq!(out, WitnessOutcome::Absent { examined: 8 });

        let f = GraphFilter::new(6).with_max_degree(4).with_gamma(2).claw_free();
        let out = witness_search(&f, |p| p.gamma_11 == 6, Exec::Parallel).unwrap();
        let g = out.witness().expect("the exceptional claw-free graph");
        assert!(is_claw_free(g));
        assert_eq!(min_quasiperfect(g, 1).unwrap().value, 6);

        let f = GraphFilter::new(6).with_max_degree(3);
        assert!(witness_search(&f, |p| p.gamma_11 >= 4, Exec::Sequential).unwrap().witness().is_none());
    }
}
