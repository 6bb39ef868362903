//! Quasiperfect domination: checks, exact optima, the γ₁ₖ chain, the 0-1
//! program and structural certificates.
//!
//! A set `S` is *k-quasiperfect dominating* when every vertex outside `S`
//! has between 1 and `k` neighbors in `S`. `γ₁ₖ(G)` is the smallest such set;
//! `γ₁₁` is perfect domination and `γ₁Δ = γ`.

mod certificate;
mod chain;
mod ilp;
mod solver;

pub use certificate::{
    find_certificates, tree_certificate, tree_gamma11_set, Certificate, CertificateError, CertificateKind,
};
pub use chain::{domination_chain, domination_chain_with, is_short_chain, symbol, DominationChain};
pub use ilp::{parse_lp, Constraint, Evaluation, IlpModel, LinearProgram, LpConstraint, LpError, Sense};
pub use solver::{
    domination_number, domination_number_with, min_quasiperfect, min_quasiperfect_with, Solution, SolveOptions,
    SolveRecord,
};

use crate::graph::{Bits, Graph, VertexSet};
use serde::Serialize;
use std::time::Duration;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("k = {k} is invalid (need 1 <= k, maximum degree {max})")]
    InvalidK { k: usize, max: usize },
    #[error("time limit exceeded after {nodes} search nodes ({elapsed:?})")]
    TimeLimit { elapsed: Duration, nodes: u64 },
}

/// A vertex outside the set with a bad number of neighbors in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    /// Neighbors in the set: 0 (undominated) or more than `k`.
    pub count: usize,
}

pub fn is_k_quasiperfect(g: &Graph, s: &VertexSet, k: usize) -> bool {
    violations_iter(g, s, k).next().is_none()
}

pub fn quasiperfect_violations(g: &Graph, s: &VertexSet, k: usize) -> Vec<Violation> {
    violations_iter(g, s, k).collect()
}

fn violations_iter<'a>(g: &'a Graph, s: &VertexSet, k: usize) -> impl Iterator<Item = Violation> + 'a {
    let inside = s.mask();
    Bits(g.vertex_mask() & !inside).filter_map(move |v| {
        let count = (g.neighbors(v) & inside).count_ones() as usize;
        (count == 0 || count > k).then_some(Violation { vertex: v, count })
    })
}

/// Plain domination: every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_k_quasiperfect(g, s, g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{bull, cycle};

    #[test]
    fn checks() {
        let c6 = cycle(6);
        let s = VertexSet::from_vertices(6, [0, 3]).unwrap();
        assert!(is_k_quasiperfect(&c6, &s, 1));
        let s = VertexSet::from_vertices(6, [0, 2]).unwrap();
        assert!(!is_k_quasiperfect(&c6, &s, 2));
        assert_eq!(
            quasiperfect_violations(&c6, &s, 1),
            vec![Violation { vertex: 1, count: 2 }, Violation { vertex: 4, count: 0 }]
        );
        let hub = VertexSet::from_vertices(5, [0, 1]).unwrap();
        assert!(is_dominating(&bull(), &hub));
        // vertex 2 sees both 0 and 1
        assert!(!is_k_quasiperfect(&bull(), &hub, 1));
        assert!(is_k_quasiperfect(&bull(), &hub, 2));
    }
}
