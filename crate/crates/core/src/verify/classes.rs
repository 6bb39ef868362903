//! Joins and cographs, claw-free realizations, and the open-range scan.

use super::extremal::{characterize, first_by};
use super::{Atlas, Claim, ClaimResult, Evidence, EvidenceKind, VerifyError, MAX_ATLAS_ORDER};
use crate::domination::{domination_chain, min_quasiperfect, SolveError};
use crate::enumerate::{enumerate, GraphFilter, GraphParams};
use crate::families::FamilySpec;
use crate::graph::{is_claw_free, is_cograph, Graph};
use crate::par::Exec;
use std::collections::BTreeMap;

/// Every graph of order `n` (connected or not) from the atlas level.
fn all_of_order(atlas: &Atlas, n: usize) -> Vec<Graph> {
    let connected = atlas.order(n).iter().map(|e| e.graph.clone());
    let disconnected = atlas
        .order(n)
        .iter()
        .map(|e| e.graph.complement())
        .filter(|c| !c.is_connected());
    connected.chain(disconnected).collect()
}

fn join_prediction(a: &Graph, b: &Graph) -> usize {
    if a.universal_vertices() != 0 || b.universal_vertices() != 0 {
        1
    } else if a.isolated_vertices() != 0 && b.isolated_vertices() != 0 {
        2
    } else {
        a.order() + b.order()
    }
}

/// `γ₁₁(G₁ ∨ G₂) ∈ {1, 2, n}` with the exact conditions; cographs inherit it.
/// `n_max` bounds the order of the join.
pub fn suite_join_cograph(atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    if n_max > MAX_ATLAS_ORDER + 1 {
        return Err(VerifyError::Limit {
            what: "join order",
            value: n_max,
            limit: MAX_ATLAS_ORDER + 1,
        });
    }
    let part_max = n_max.saturating_sub(1);
    atlas.require(part_max)?;
    let mut out = Vec::new();

    let mut claim = Claim::new(
        "join.trichotomy",
        "γ₁₁(G₁ ∨ G₂) is 1 if a part has a universal vertex, else 2 if both parts have an isolated vertex, else n",
        format!("ordered pairs of graphs, n₁ + n₂ ≤ {n_max}"),
    );
    let pool: Vec<Vec<Graph>> = (1..=part_max).map(|n| all_of_order(atlas, n)).collect();
    let pairs: Vec<(&Graph, &Graph)> = pool
        .iter()
        .flatten()
        .flat_map(|a| {
            pool[..n_max - a.order()]
                .iter()
                .flatten()
                .map(move |b| (a, b))
        })
        .collect();
    let results = atlas.exec.map(&pairs, |&(a, b)| -> Result<_, SolveError> {
        let g = a.join(b).expect("order within bounds");
        let value = min_quasiperfect(&g, 1)?.value;
        Ok((join_prediction(a, b), value, g))
    });
    let mut by_case = [0usize; 3];
    for r in results {
        let (predicted, value, g) = r?;
        let case = match predicted {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        by_case[case] += 1;
        if value != predicted {
            claim.fail(format!("γ₁₁ = {value}, predicted {predicted}"), &g, None);
        }
    }
    claim.push(Evidence::exhaustion(
        format!(
            "pairs by predicted case: {} universal, {} isolated, {} otherwise",
            by_case[0], by_case[1], by_case[2]
        ),
        pairs.len(),
    ));
    for (a, b, what) in [
        (FamilySpec::Empty(2), FamilySpec::Empty(2), "K̄₂ ∨ K̄₂ = C₄"),
        (FamilySpec::Path(3), FamilySpec::Path(3), "P₃ ∨ P₃"),
        (FamilySpec::Path(4), FamilySpec::Path(4), "P₄ ∨ P₄"),
    ] {
        let (a, b) = (a.build()?, b.build()?);
        let g = a.join(&b)?;
        let chain = domination_chain(&g)?;
        let detail = format!("{what}: γ₁₁ = {}", chain.gamma_11());
        if chain.gamma_11() == join_prediction(&a, &b) {
            claim.push(Evidence::graph(EvidenceKind::Construction, detail, &g, Some(&chain)));
        } else {
            claim.fail(detail, &g, Some(&chain));
        }
    }
    out.push(claim.finish());

    let cograph_max = n_max.min(atlas.n_max());
    let mut claim = Claim::new(
        "cograph.values",
        "connected cographs have γ₁₁ ∈ {1, 2, n}",
        format!("connected cographs, n ≤ {cograph_max}"),
    );
    let mut examined = 0;
    for e in atlas.up_to(cograph_max).filter(|e| is_cograph(&e.graph)) {
        examined += 1;
        let v = e.chain.gamma_11();
        if v != 1 && v != 2 && v != e.graph.order() {
            claim.fail(format!("γ₁₁ = {v}"), &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("connected cographs", examined));
    out.push(claim.finish());
    Ok(out)
}

fn clawfree_sufficient(h: usize, k: usize, n: usize) -> bool {
    h + k <= n || 3 * h + k < 2 * n
}

/// Largest order for which the claw-free constructions are rebuilt.
const CONSTRUCTION_ORDER: usize = 10;

/// Which `(γ, γ₁₁)` pairs claw-free graphs realize.
pub fn suite_clawfree(atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    atlas.require(n_max)?;
    let mut out = Vec::new();

    let mut claim = Claim::new(
        "clawfree.small-cases",
        "for 4 ≤ n ≤ 7 and 2 ≤ h ≤ k ≤ n, a connected claw-free graph with γ = h and γ₁₁ = k exists iff h+k ≤ n or 3h+k+1 ≤ 2n or (h,k,n) = (2,6,6)",
        format!("connected claw-free graphs, 4 ≤ n ≤ {}", n_max.min(7)),
    );
    for n in 4..=n_max.min(7) {
        let level = atlas.order(n);
        let realized = first_by(level.iter(), |e| {
            (e.chain.gamma >= 2 && is_claw_free(&e.graph)).then(|| (e.chain.gamma, e.chain.gamma_11()))
        });
        let domain: Vec<(usize, usize)> = (2..=n).flat_map(|h| (h..=n).map(move |k| (h, k))).collect();
        let predicted = |(h, k): (usize, usize)| clawfree_sufficient(h, k, n) || (h, k, n) == (2, 6, 6);
        characterize(&mut claim, &domain, predicted, &realized, level.len(), |(h, k)| {
            format!("(h,k,n) = ({h},{k},{n})")
        });
    }
    out.push(claim.finish());

    if n_max >= 7 {
        let mut claim = Claim::new(
            "clawfree.order7-count",
            "exactly three claw-free graphs of order 7 have Δ = 4 and γ = 3, all with 3 ≤ γ₁₁ ≤ 4",
            "connected claw-free graphs, n = 7",
        );
        let hits: Vec<_> = atlas
            .order(7)
            .iter()
            .filter(|e| e.graph.max_degree() == 4 && e.chain.gamma == 3 && is_claw_free(&e.graph))
            .collect();
        if hits.len() != 3 {
            claim.fail_note(format!("{} classes found", hits.len()));
        }
        for e in &hits {
            if (3..=4).contains(&e.chain.gamma_11()) {
                claim.push(Evidence::graph(EvidenceKind::Witness, "matching class", &e.graph, Some(&e.chain)));
            } else {
                claim.fail("γ₁₁ outside 3..=4", &e.graph, Some(&e.chain));
            }
        }
        claim.push(Evidence::exhaustion("connected classes of order 7", atlas.order(7).len()));
        out.push(claim.finish());
    }

    let mut claim = Claim::new(
        "clawfree.constructions",
        "h+k ≤ n or 3h+k+1 ≤ 2n gives a connected claw-free graph with γ = h, γ₁₁ = k",
        format!("2 ≤ h ≤ k, n ≤ {CONSTRUCTION_ORDER}"),
    );
    let mut built = 0;
    for n in 4..=CONSTRUCTION_ORDER {
        for h in 2..=n {
            for k in h..=n {
                let spec = if h + k <= n {
                    FamilySpec::ClawFreeA { h, k, n }
                } else if 3 * h + k < 2 * n {
                    FamilySpec::ClawFreeB { h, k, n }
                } else {
                    continue;
                };
                built += 1;
                let g = spec.build()?;
                let chain = domination_chain(&g)?;
                if !(is_claw_free(&g) && chain.gamma == h && chain.gamma_11() == k) {
                    claim.fail(format!("{spec}: γ = {}, γ₁₁ = {}", chain.gamma, chain.gamma_11()), &g, Some(&chain));
                }
            }
        }
    }
    claim.push(Evidence::exhaustion("constructions built and solved", built));
    out.push(claim.finish());
    Ok(out)
}

/// Largest order the scan accepts.
pub const MAX_SCAN_ORDER: usize = 9;

/// Reports claw-free realizations beyond both sufficient conditions at
/// orders `8..=n_max`; the converse is open, so no verdict is given.
pub fn suite_clawfree_scan(n_max: usize, exec: Exec) -> Result<Vec<ClaimResult>, VerifyError> {
    if n_max > MAX_SCAN_ORDER {
        return Err(VerifyError::Limit {
            what: "scan order",
            value: n_max,
            limit: MAX_SCAN_ORDER,
        });
    }
    let mut claim = Claim::new(
        "clawfree.converse-scan",
        "a claw-free graph with γ = h, γ₁₁ = k might always satisfy h+k ≤ n or 3h+k+1 ≤ 2n",
        format!("connected claw-free graphs, 8 ≤ n ≤ {n_max}; conjecture, no verdict"),
    );
    for n in 8..=n_max {
        let report = enumerate(&GraphFilter::new(n).claw_free(), exec, &mut |_, _| {})?;
        let params = exec.map(&report.graphs, GraphParams::of);
        let mut outside: BTreeMap<(usize, usize), &Graph> = BTreeMap::new();
        for (g, p) in report.graphs.iter().zip(params) {
            let p = p?;
            if p.gamma >= 2 && !clawfree_sufficient(p.gamma, p.gamma_11, n) {
                outside.entry((p.gamma, p.gamma_11)).or_insert(g);
            }
        }
        for (&(h, k), g) in &outside {
            claim.push(Evidence::graph(
                EvidenceKind::Witness,
                format!("(h,k,n) = ({h},{k},{n}) realized outside both conditions"),
                g,
                None,
            ));
        }
        claim.push(Evidence::exhaustion(
            format!("order {n}: {} pairs outside both conditions", outside.len()),
            report.count,
        ));
    }
    Ok(vec![claim.out_of_scope()])
}
