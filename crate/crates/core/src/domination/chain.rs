//! The chain `n ≥ γ₁₁ ≥ γ₁₂ ≥ … ≥ γ₁Δ = γ`.

use super::solver::{domination_number_with, min_quasiperfect_with, SolveOptions};
use super::SolveError;
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationChain {
    pub n: usize,
    pub max_degree: usize,
    /// `values[k-1] = γ₁ₖ` for `k = 1..=Δ`.
    pub values: Vec<usize>,
    pub witnesses: Vec<VertexSet>,
    pub gamma: usize,
    pub gamma_witness: VertexSet,
    pub nodes_expanded: u64,
}

impl DominationChain {
    /// `γ₁ₖ`; values of `k` beyond `Δ` give `γ`.
    pub fn gamma_1k(&self, k: usize) -> usize {
        assert!(k >= 1, "k starts at 1");
        self.values.get(k - 1).copied().unwrap_or(self.gamma)
    }

    pub fn gamma_11(&self) -> usize {
        self.gamma_1k(1)
    }

    pub fn gamma_12(&self) -> usize {
        self.gamma_1k(2)
    }

    /// `γ₁₂ = γ`, i.e. the chain collapses after its first step.
    pub fn is_short(&self) -> bool {
        self.gamma_12() == self.gamma
    }

    /// `n ≥ γ₁₁ ≥ … ≥ γ₁Δ = γ`.
    pub fn is_monotone(&self) -> bool {
        self.values.first().map_or(true, |&v| v <= self.n)
            && self.values.windows(2).all(|w| w[0] >= w[1])
            && self.values.last().map_or(true, |&v| v == self.gamma)
    }
}

impl fmt::Display for DominationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            write!(f, "{}={v} ", symbol(i + 1))?;
        }
        write!(f, "γ={}", self.gamma)
    }
}

/// `γ₁ₖ` with `k` as subscript digits.
pub fn symbol(k: usize) -> String {
    let digits: String = k
        .to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect();
    format!("γ₁{digits}")
}

pub fn domination_chain(g: &Graph) -> Result<DominationChain, SolveError> {
    domination_chain_with(g, &SolveOptions::default())
}

/// Solves every `k` from scratch, so the monotonicity of the chain is
/// observed rather than assumed.
pub fn domination_chain_with(g: &Graph, opts: &SolveOptions) -> Result<DominationChain, SolveError> {
    let delta = g.max_degree();
    let gamma = domination_number_with(g, opts)?;
    let mut nodes = gamma.nodes_expanded;
    let mut values = Vec::with_capacity(delta);
    let mut witnesses = Vec::with_capacity(delta);
    for k in 1..=delta {
        let s = min_quasiperfect_with(g, k, opts)?;
        nodes += s.nodes_expanded;
        values.push(s.value);
        witnesses.push(s.witness);
    }
    Ok(DominationChain {
        n: g.order(),
        max_degree: delta,
        values,
        witnesses,
        gamma: gamma.value,
        gamma_witness: gamma.witness,
        nodes_expanded: nodes,
    })
}

/// `γ₁₂(G) = γ(G)`; only two solves are needed.
pub fn is_short_chain(g: &Graph) -> Result<bool, SolveError> {
    let opts = SolveOptions::default();
    let gamma = domination_number_with(g, &opts)?.value;
    // with Δ = 1 the chain is the single value γ₁₁ = γ
    if g.max_degree() <= 1 {
        return Ok(true);
    }
    Ok(min_quasiperfect_with(g, 2, &opts)?.value == gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{bull, complete, cycle, path};

    #[test]
    fn small_chains() {
        let c = domination_chain(&cycle(5)).unwrap();
        assert_eq!(c.values, vec![3, 2]);
        assert_eq!(c.gamma, 2);
        assert!(c.is_short() && c.is_monotone());
        assert_eq!(c.to_string(), "γ₁₁=3 γ₁₂=2 γ=2");

        let b = domination_chain(&bull()).unwrap();
        assert_eq!(b.values, vec![3, 2, 2]);

        let k1 = domination_chain(&Graph::empty(1).unwrap()).unwrap();
        assert!(k1.values.is_empty());
        assert_eq!((k1.gamma, k1.gamma_11()), (1, 1));
        assert!(k1.is_short());

        let k2 = domination_chain(&complete(2)).unwrap();
        assert_eq!((k2.values.clone(), k2.gamma), (vec![1], 1));
    }

    #[test]
    fn short_chain_shortcut_agrees() {
        for g in [path(2), path(7), cycle(7), complete(5), bull()] {
            assert_eq!(is_short_chain(&g).unwrap(), domination_chain(&g).unwrap().is_short());
        }
    }

    #[test]
    fn subscripts() {
        assert_eq!(symbol(12), "γ₁₁₂");
    }
}
