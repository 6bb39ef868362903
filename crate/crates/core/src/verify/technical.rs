//! The chain law and the elementary facts about `γ₁ₖ`.

use super::{Atlas, Claim, ClaimResult, Evidence, VerifyError};
use crate::domination::is_k_quasiperfect;
use crate::graph::{Bits, VertexSet};

/// Order up to which every subset of every graph is checked.
const SUBSET_ORDER: usize = 6;

pub fn suite_technical(atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    atlas.require(n_max)?;
    let scope = format!("connected graphs, n ≤ {n_max}");
    let entries: Vec<_> = atlas.up_to(n_max).collect();
    let mut out = Vec::new();

    let mut claim = Claim::new("chain.monotone", "n ≥ γ₁₁ ≥ γ₁₂ ≥ … ≥ γ₁Δ = γ", scope.clone());
    for e in &entries {
        if !e.chain.is_monotone() {
            claim.fail("chain not monotone", &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("classes", entries.len()));
    out.push(claim.finish());

    let mut claim = Claim::new("technical.plateau", "γ ≤ Δ implies γ₁ₖ = γ for γ ≤ k ≤ Δ", scope.clone());
    for e in &entries {
        let (gamma, delta) = (e.chain.gamma, e.chain.max_degree);
        if (gamma..=delta).any(|k| e.chain.gamma_1k(k) != gamma) {
            claim.fail("γ₁ₖ ≠ γ on the plateau", &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("classes", entries.len()));
    out.push(claim.finish());

    let mut claim = Claim::new("technical.min-degree", "γ₁δ < n", format!("connected graphs, 2 ≤ n ≤ {n_max}"));
    let mut examined = 0;
    for e in entries.iter().filter(|e| e.graph.order() >= 2) {
        examined += 1;
        if e.chain.gamma_1k(e.graph.min_degree()) >= e.graph.order() {
            claim.fail("γ₁δ = n", &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("classes", examined));
    out.push(claim.finish());

    let mut claim = Claim::new("technical.universal", "γ₁₁ = 1 iff Δ = n−1", scope.clone());
    for e in &entries {
        if (e.chain.gamma_11() == 1) != (e.graph.max_degree() + 1 == e.graph.order()) {
            claim.fail("γ₁₁ = 1 disagrees with Δ = n−1", &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("classes", entries.len()));
    out.push(claim.finish());

    for (id, n_min) in [("technical.leaves", 1), ("technical.leaves-order3", 3)] {
        let mut claim = Claim::new(
            id,
            "γ₁₁ ≤ n − ℓ, where ℓ counts the degree-1 vertices",
            format!("connected graphs, {n_min} ≤ n ≤ {n_max}"),
        );
        let mut examined = 0;
        for e in entries.iter().filter(|e| e.graph.order() >= n_min) {
            examined += 1;
            if e.chain.gamma_11() + e.graph.leaf_count() > e.graph.order() {
                claim.fail("γ₁₁ > n − ℓ", &e.graph, Some(&e.chain));
            }
        }
        claim.push(Evidence::exhaustion("classes", examined));
        if n_min == 1 {
            claim.push(Evidence::note(
                "moving a code vertex from a leaf to its neighbor fails when that neighbor is itself a leaf",
            ));
        }
        out.push(claim.finish());
    }

    let small = n_max.min(SUBSET_ORDER);
    let subset_scope = format!("every k-quasiperfect set of every connected graph, n ≤ {small}, 1 ≤ k ≤ Δ");
    let mut forced_vertex = Claim::new(
        "technical.forced-vertex",
        "if S is k-quasiperfect and |N(v) ∩ S| > k then v ∈ S",
        subset_scope.clone(),
    );
    let mut forced_clique = Claim::new(
        "technical.forced-clique",
        "if S is k-quasiperfect and a clique K has |K ∩ S| > k then K ⊆ S",
        subset_scope,
    );
    let mut sets = 0;
    for e in entries.iter().filter(|e| e.graph.order() <= small) {
        let g = &e.graph;
        let n = g.order();
        let all = g.vertex_mask();
        let cliques: Vec<u64> = (1..=all)
            .filter(|&m| Bits(m).all(|v| (g.closed_neighbors(v) & m) == m))
            .collect();
        for k in 1..=g.max_degree() {
            for s in 1..=all {
                let set = VertexSet::from_mask(n, s).expect("subset");
                if !is_k_quasiperfect(g, &set, k) {
                    continue;
                }
                sets += 1;
                if Bits(all & !s).any(|v| (g.neighbors(v) & s).count_ones() as usize > k) {
                    forced_vertex.fail(format!("k = {k}, S = {:?}", set.to_vec()), g, Some(&e.chain));
                }
                if cliques
                    .iter()
                    .any(|&c| (c & s).count_ones() as usize > k && c & !s != 0)
                {
                    forced_clique.fail(format!("k = {k}, S = {:?}", set.to_vec()), g, Some(&e.chain));
                }
            }
        }
    }
    for mut claim in [forced_vertex, forced_clique] {
        claim.push(Evidence::exhaustion("k-quasiperfect sets checked", sets));
        out.push(claim.finish());
    }
    Ok(out)
}
