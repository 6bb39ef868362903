//! Structural certificates for graphs of maximum degree 3.
//!
//! Removing an induced cycle whose vertices all have degree 3, or an induced
//! path with degree-2 ends and degree-3 interior, leaves a perfect dominating
//! set: each removed vertex keeps exactly one neighbor outside the removed
//! piece. Trees of order at least 7 get an explicit set of size `n − 4`.

use super::is_k_quasiperfect;
use crate::graph::{induced_cycles, induced_paths_between, is_tree, Bits, Graph, VertexSet};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Degree3Cycle,
    Degree2Path,
    /// Tree with several degree-3 vertices: four leaves removed.
    TreeLeaves,
    TreeCase1,
    TreeCase2,
    TreeCase3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// The removed vertices (cycle or path in order).
    pub vertices: Vec<usize>,
    /// Upper bound on `γ₁₁` certified by `set`.
    pub bound: usize,
    /// The perfect dominating set `V ∖ vertices`.
    pub set: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("maximum degree is {0}, expected 3")]
    MaxDegree(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotTree,
    #[error("order {0} is below 7")]
    TooSmall(usize),
}

/// Every degree-3 induced cycle and every degree-2-ended induced path whose
/// complement is a perfect dominating set.
pub fn find_certificates(g: &Graph) -> Result<Vec<Certificate>, CertificateError> {
    if g.max_degree() != 3 {
        return Err(CertificateError::MaxDegree(g.max_degree()));
    }
    if !g.is_connected() {
        return Err(CertificateError::Disconnected);
    }
    let n = g.order();
    let (deg2, deg3) = Bits(g.vertex_mask()).fold((0u64, 0u64), |(d2, d3), v| match g.degree(v) {
        2 => (d2 | 1 << v, d3),
        3 => (d2, d3 | 1 << v),
        _ => (d2, d3),
    });
    let cycles = induced_cycles(g, deg3, n)
        .into_iter()
        .map(|c| (CertificateKind::Degree3Cycle, c));
    let paths = induced_paths_between(g, deg2, deg3, 3, n)
        .into_iter()
        .map(|p| (CertificateKind::Degree2Path, p));
    Ok(cycles
        .chain(paths)
        .filter_map(|(kind, vertices)| certify(g, kind, vertices))
        .collect())
}

fn certify(g: &Graph, kind: CertificateKind, vertices: Vec<usize>) -> Option<Certificate> {
    let n = g.order();
    let removed = VertexSet::from_vertices(n, vertices.iter().copied()).ok()?;
    let set = removed.complement();
    (!set.is_empty() && is_k_quasiperfect(g, &set, 1)).then(|| Certificate {
        kind,
        bound: n - vertices.len(),
        vertices,
        set,
    })
}

/// A perfect dominating set of size `n − 4` for a tree with `Δ = 3`, `n ≥ 7`.
pub fn tree_gamma11_set(t: &Graph) -> Result<VertexSet, CertificateError> {
    tree_certificate(t).map(|c| c.set)
}

pub fn tree_certificate(t: &Graph) -> Result<Certificate, CertificateError> {
    if !is_tree(t) {
        return Err(CertificateError::NotTree);
    }
    if t.max_degree() != 3 {
        return Err(CertificateError::MaxDegree(t.max_degree()));
    }
    let n = t.order();
    if n < 7 {
        return Err(CertificateError::TooSmall(n));
    }
    let all = t.vertex_mask();
    let branch: Vec<usize> = Bits(all).filter(|&v| t.degree(v) == 3).collect();
    let (kind, set) = if branch.len() >= 2 {
        // at least four leaves; each keeps its only neighbor in the set
        let leaves: Vec<usize> = Bits(all).filter(|&v| t.degree(v) == 1).take(4).collect();
        let mask = leaves.iter().fold(all, |m, &v| m & !(1u64 << v));
        (CertificateKind::TreeLeaves, mask)
    } else {
        spider_set(t, branch[0])
    };
    let set = VertexSet::from_mask(n, set).expect("subset of the vertex set");
    let vertices = set.complement().to_vec();
    debug_assert!(is_k_quasiperfect(t, &set, 1));
    Ok(Certificate {
        kind,
        bound: n - 4,
        vertices,
        set,
    })
}

/// The three legs hanging from the only degree-3 vertex `u`, listed outward
/// and ordered by (length, smallest id); the set follows the leg lengths.
fn spider_set(t: &Graph, u: usize) -> (CertificateKind, u64) {
    let mut legs: Vec<Vec<usize>> = Bits(t.neighbors(u))
        .map(|first| {
            let mut leg = vec![first];
            let mut prev = u;
            let mut cur = first;
            while let Some(next) = Bits(t.neighbors(cur) & !(1u64 << prev)).next() {
                leg.push(next);
                prev = cur;
                cur = next;
            }
            leg
        })
        .collect();
    legs.sort_by_key(|leg| (leg.len(), leg.iter().min().copied()));
    let (a, b, c) = (&legs[0], &legs[1], &legs[2]);
    let mask = |vs: &[usize]| vs.iter().fold(0u64, |m, &v| m | 1 << v);
    let k = c.len();
    match (a.len(), b.len()) {
        (1, 1) => (CertificateKind::TreeCase1, 1 << u | mask(&c[2..])),
        (1, _) => (CertificateKind::TreeCase2, mask(a) | mask(&b[1..]) | mask(&c[1..k - 1])),
        _ => (CertificateKind::TreeCase3, mask(&a[1..]) | mask(&b[1..]) | mask(&c[..k - 1])),
    }
}
