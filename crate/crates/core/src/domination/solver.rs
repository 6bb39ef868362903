//! Exact branch-and-bound search for minimum k-quasiperfect dominating sets.
//!
//! Target sizes are tried in increasing order starting from `⌈n/(Δ+1)⌉`.
//! For a fixed target the search branches on the lowest undecided vertex,
//! include before exclude, so the first set found is the lexicographically
//! smallest minimum set. Between branchings, forced decisions are propagated
//! to a fixpoint:
//!
//! * a vertex with more than `k` chosen neighbors must be chosen;
//! * a clique holding more than `k` chosen vertices must be chosen entirely;
//! * an excluded vertex with exactly `k` chosen neighbors excludes its other
//!   undecided neighbors;
//! * an excluded vertex with no chosen neighbor and a single undecided one
//!   forces that neighbor in;
//! * an undecided vertex that can no longer be dominated from outside must
//!   be chosen.
//!
//! A covering bound (undominated vertices over the best closed-neighborhood
//! coverage) prunes targets that cannot be met.

use super::SolveError;
use crate::graph::{bit, Bits, Graph, VertexSet};
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Abort with [`SolveError::TimeLimit`] after this long.
    pub time_limit: Option<Duration>,
}

/// An optimal k-quasiperfect dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// The bound actually used (requests above `Δ` are clamped).
    pub k: usize,
    pub value: usize,
    /// Lexicographically smallest optimal set.
    pub witness: VertexSet,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

/// Line-oriented JSON result record.
#[derive(Debug, Clone, Serialize)]
pub struct SolveRecord {
    pub n: usize,
    pub k: usize,
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_expanded: u64,
    pub millis: f64,
}

impl Solution {
    pub fn record(&self) -> SolveRecord {
        SolveRecord {
            n: self.witness.order(),
            k: self.k,
            value: self.value,
            witness: self.witness.to_vec(),
            nodes_expanded: self.nodes_expanded,
            millis: self.elapsed.as_secs_f64() * 1e3,
        }
    }
}

/// `γ₁ₖ(G)` with a lexicographically smallest witness.
pub fn min_quasiperfect(g: &Graph, k: usize) -> Result<Solution, SolveError> {
    min_quasiperfect_with(g, k, &SolveOptions::default())
}

pub fn min_quasiperfect_with(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Solution, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK { k, max: g.max_degree() });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let cap = g.max_degree().max(1);
    let k = if k > cap {
        log::warn!("k = {k} exceeds the maximum degree; using k = {cap}");
        cap
    } else {
        k
    };
    let mut sol = solve(g, k as u32, opts)?;
    sol.k = k;
    Ok(sol)
}

/// Domination number `γ(G)` (no upper bound on chosen neighbors).
pub fn domination_number(g: &Graph) -> Result<Solution, SolveError> {
    domination_number_with(g, &SolveOptions::default())
}

pub fn domination_number_with(g: &Graph, opts: &SolveOptions) -> Result<Solution, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let mut sol = solve(g, g.order() as u32, opts)?;
    sol.k = g.max_degree().max(1);
    Ok(sol)
}

fn solve(g: &Graph, bound: u32, opts: &SolveOptions) -> Result<Solution, SolveError> {
    let start = Instant::now();
    let n = g.order();
    let delta = g.max_degree();
    let lower = n.div_ceil(delta + 1).max(1);
    let cliques = if (bound as usize) < n { rich_cliques(g, bound) } else { Vec::new() };
    let mut search = Search {
        adj: g.adjacency(),
        all: g.vertex_mask(),
        bound,
        target: 0,
        cliques: &cliques,
        nodes: 0,
        deadline: opts.time_limit.map(|t| start + t),
        timed_out: false,
    };
    for target in lower..=n {
        search.target = target as u32;
        let found = search.dfs(0, 0);
        if search.timed_out {
            return Err(SolveError::TimeLimit {
                elapsed: start.elapsed(),
                nodes: search.nodes,
            });
        }
        if let Some(set) = found {
            return Ok(Solution {
                k: bound as usize,
                value: target,
                witness: VertexSet::from_mask(n, set).expect("witness within vertex range"),
                nodes_expanded: search.nodes,
                elapsed: start.elapsed(),
            });
        }
    }
    unreachable!("the full vertex set is always k-quasiperfect")
}

/// Maximal cliques large enough for the clique rule to fire (more than
/// `bound` chosen members plus at least one outsider).
fn rich_cliques(g: &Graph, bound: u32) -> Vec<u64> {
    // The rule is implied by the per-vertex rule, so giving up on graphs
    // with very many maximal cliques only costs propagation speed.
    const CAP: usize = 4096;
    let mut out = Vec::new();
    let adj = g.adjacency();
    let mut overflow = false;
    bron_kerbosch(adj, 0, g.vertex_mask(), 0, &mut |q| {
        if q.count_ones() > bound + 1 {
            out.push(q);
        }
        if out.len() > CAP {
            overflow = true;
        }
        !overflow
    });
    if overflow {
        out.clear();
    }
    out
}

/// Pivoting Bron–Kerbosch; `emit` returns false to stop.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, emit: &mut dyn FnMut(u64) -> bool) -> bool {
    if p == 0 {
        return x != 0 || emit(r);
    }
    let pivot = Bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
    for v in Bits(p & !adj[pivot]) {
        if !bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], emit) {
            return false;
        }
        p &= !bit(v);
        x |= bit(v);
    }
    true
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    bound: u32,
    target: u32,
    cliques: &'a [u64],
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    fn dfs(&mut self, inside: u64, outside: u64) -> Option<u64> {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return None;
        }
        let (inside, outside) = self.propagate(inside, outside)?;
        let undecided = self.all & !inside & !outside;
        if undecided == 0 {
            return self.accept(inside).then_some(inside);
        }
        let v = undecided.trailing_zeros() as usize;
        if let Some(found) = self.dfs(inside | bit(v), outside) {
            return Some(found);
        }
        self.dfs(inside, outside | bit(v))
    }

    fn accept(&self, inside: u64) -> bool {
        inside.count_ones() == self.target
            && Bits(self.all & !inside).all(|v| {
                let c = (self.adj[v] & inside).count_ones();
                c >= 1 && c <= self.bound
            })
    }

    fn propagate(&self, mut inside: u64, mut outside: u64) -> Option<(u64, u64)> {
        let k = self.bound;
        loop {
            if inside & outside != 0 {
                return None;
            }
            let size = inside.count_ones();
            if size > self.target {
                return None;
            }
            let undecided = self.all & !inside & !outside;
            if size == self.target && undecided != 0 {
                outside |= undecided;
                continue;
            }
            let mut force_in = 0u64;
            let mut force_out = 0u64;
            for v in Bits(self.all & !inside) {
                let nb = self.adj[v];
                let chosen = (nb & inside).count_ones();
                let open = nb & undecided;
                if outside & bit(v) != 0 {
                    if chosen > k {
                        return None;
                    }
                    if chosen == 0 {
                        if open == 0 {
                            return None;
                        }
                        if open.count_ones() == 1 {
                            force_in |= open;
                        }
                    }
                    if chosen == k {
                        force_out |= open;
                    }
                } else if chosen > k || (chosen == 0 && open == 0) {
                    force_in |= bit(v);
                }
            }
            for &q in self.cliques {
                if (q & inside).count_ones() > k {
                    force_in |= q;
                }
            }
            if force_in & force_out != 0 {
                return None;
            }
            let (ni, no) = (inside | force_in, outside | force_out);
            if ni == inside && no == outside {
                break;
            }
            inside = ni;
            outside = no;
        }
        // covering bound on the sets still needed
        let dominated = Bits(inside).fold(inside, |m, v| m | self.adj[v]);
        let undominated = self.all & !dominated;
        if undominated != 0 {
            let undecided = self.all & !inside & !outside;
            let best = Bits(undecided)
                .map(|u| ((self.adj[u] | bit(u)) & undominated).count_ones())
                .max()
                .unwrap_or(0);
            if best == 0 {
                return None;
            }
            let need = undominated.count_ones().div_ceil(best);
            if inside.count_ones() + need > self.target {
                return None;
            }
        }
        Some((inside, outside))
    }
}
