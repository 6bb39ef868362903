//! Short chains and the extremal degree cases `Δ = n−2`, `Δ = n−3`, `Δ = 3`.

use super::{Atlas, AtlasEntry, Claim, ClaimResult, Evidence, EvidenceKind, VerifyError};
use crate::domination::{domination_chain, find_certificates, is_k_quasiperfect, tree_certificate};
use crate::enumerate::{all_graphs, enumerate, GraphFilter};
use crate::families::FamilySpec;
use crate::graph::{is_claw_free, is_cograph, is_cubic, is_isomorphic, Graph};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Checks a predicted existence table against the classes realized in the
/// atlas, key by key.
pub(super) fn characterize<K: Ord + Copy + Debug>(
    claim: &mut Claim,
    domain: &[K],
    predicted: impl Fn(K) -> bool,
    realized: &BTreeMap<K, &AtlasEntry>,
    examined: usize,
    describe: impl Fn(K) -> String,
) {
    for &key in domain {
        let what = describe(key);
        match (predicted(key), realized.get(&key)) {
            (true, Some(e)) => claim.push(Evidence::graph(EvidenceKind::Witness, what, &e.graph, Some(&e.chain))),
            (false, None) => claim.push(Evidence::exhaustion(format!("{what}: none"), examined)),
            (true, None) => claim.fail_note(format!("{what}: predicted but absent among {examined} classes")),
            (false, Some(e)) => claim.fail(format!("{what}: exists but predicted impossible"), &e.graph, Some(&e.chain)),
        }
    }
    for (key, e) in realized {
        if !domain.contains(key) {
            claim.fail(format!("{}: outside the predicted range", describe(*key)), &e.graph, Some(&e.chain));
        }
    }
}

/// First class (in label order) for every key.
pub(super) fn first_by<'a, K: Ord>(
    entries: impl Iterator<Item = &'a AtlasEntry>,
    key: impl Fn(&AtlasEntry) -> Option<K>,
) -> BTreeMap<K, &'a AtlasEntry> {
    let mut out = BTreeMap::new();
    for e in entries {
        if let Some(k) = key(e) {
            out.entry(k).or_insert(e);
        }
    }
    out
}

/// Each of `Δ ≥ n−3`, `Δ ≤ 2`, cograph, claw-free forces `γ₁₂ = γ`.
pub fn suite_short_chain(atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    atlas.require(n_max)?;
    let hypotheses: [(&str, &str, fn(&Graph) -> bool); 4] = [
        ("short-chain.dense", "Δ ≥ n−3 implies γ₁₂ = γ", |g| g.max_degree() + 3 >= g.order()),
        ("short-chain.sparse", "Δ ≤ 2 implies γ₁₂ = γ", |g| g.max_degree() <= 2),
        ("short-chain.cograph", "cographs have γ₁₂ = γ", is_cograph),
        ("short-chain.claw-free", "claw-free graphs have γ₁₂ = γ", is_claw_free),
    ];
    let scope = format!("connected graphs, n ≤ {n_max}");
    let mut out = Vec::new();
    for (id, statement, holds) in hypotheses {
        let mut claim = Claim::new(id, statement, scope.clone());
        let mut examined = 0;
        for e in atlas.up_to(n_max).filter(|e| holds(&e.graph)) {
            examined += 1;
            if !e.chain.is_short() {
                claim.fail("γ₁₂ ≠ γ", &e.graph, Some(&e.chain));
            }
        }
        claim.push(Evidence::exhaustion("classes satisfying the hypothesis", examined));
        out.push(claim.finish());
    }
    Ok(out)
}

fn delta_n2_excluded(k: usize, n: usize) -> bool {
    matches!((k, n), (3, 4) | (4, 4) | (4, 5) | (5, 5))
}

/// Largest order for which the constructions are rebuilt.
const CONSTRUCTION_ORDER: usize = 10;

/// `Δ = n−2` and `γ₁₁ = k` is realizable exactly off four small pairs.
pub fn suite_delta_n2(atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    atlas.require(n_max)?;
    let mut out = Vec::new();

    let mut claim = Claim::new(
        "delta-n2.realizable",
        "for n ≥ 4 and 2 ≤ k ≤ n, a connected graph with Δ = n−2 and γ₁₁ = k exists iff (k,n) ∉ {(3,4),(4,4),(4,5),(5,5)}",
        format!("connected graphs, 4 ≤ n ≤ {n_max}"),
    );
    for n in 4..=n_max {
        let level = atlas.order(n);
        let realized = first_by(level.iter(), |e| (e.graph.max_degree() + 2 == n).then(|| e.chain.gamma_11()));
        let domain: Vec<usize> = (2..=n).collect();
        characterize(&mut claim, &domain, |k| !delta_n2_excluded(k, n), &realized, level.len(), |k| {
            format!("(k,n) = ({k},{n})")
        });
    }
    out.push(claim.finish());

    let mut claim = Claim::new(
        "delta-n2.constructions",
        "K_{2,n−2} gives k = 2, P_{n−2} ∨ K̄₂ gives k = n (n ≥ 6), the pendant construction gives 4 ≤ k ≤ n−2",
        format!("4 ≤ n ≤ {CONSTRUCTION_ORDER}"),
    );
    for n in 4..=CONSTRUCTION_ORDER {
        let mut specs = vec![(2, FamilySpec::Biclique(2, n - 2))];
        if n >= 6 {
            specs.push((n, FamilySpec::Pn2Join(n)));
        }
        specs.extend((4..=n.saturating_sub(2)).map(|k| (k, FamilySpec::PendantJoin { n, k })));
        for (k, spec) in specs {
            let g = spec.build()?;
            let chain = domination_chain(&g)?;
            let detail = format!("{spec}: Δ = {}, γ₁₁ = {}", g.max_degree(), chain.gamma_11());
            if g.max_degree() + 2 == n && chain.gamma_11() == k {
                claim.push(Evidence::graph(EvidenceKind::Construction, detail, &g, Some(&chain)));
            } else {
                claim.fail(detail, &g, Some(&chain));
            }
        }
    }
    out.push(claim.finish());

    if n_max >= 5 {
        let mut claim = Claim::new(
            "delta-n2.order5-count",
            "there are eight graphs of order 5 with Δ = 3, each with γ₁₁ ∈ {2, 3}",
            "connected graphs, n = 5",
        );
        let hits: Vec<&AtlasEntry> = atlas.order(5).iter().filter(|e| e.graph.max_degree() == 3).collect();
        if hits.len() != 8 {
            claim.fail_note(format!("found {} connected classes", hits.len()));
        }
        for e in &hits {
            if matches!(e.chain.gamma_11(), 2 | 3) {
                claim.push(Evidence::graph(EvidenceKind::Witness, "Δ = 3", &e.graph, Some(&e.chain)));
            } else {
                claim.fail("γ₁₁ ∉ {2, 3}", &e.graph, Some(&e.chain));
            }
        }
        let unrestricted = all_graphs(5, atlas.exec)?.iter().filter(|g| g.max_degree() == 3).count();
        claim.push(Evidence::exhaustion(
            format!("{} connected; {unrestricted} when disconnected graphs are included", hits.len()),
            atlas.order(5).len(),
        ));
        out.push(claim.finish());
    }
    Ok(out)
}

fn delta_n3_excluded(gamma: usize, k: usize, n: usize) -> bool {
    match gamma {
        2 => matches!((k, n), (4, 5) | (5, 5) | (4, 6) | (5, 6) | (6, 6)),
        _ => matches!((k, n), (4, 6) | (5, 6) | (6, 6) | (5, 7) | (6, 7) | (7, 7) | (8, 8)),
    }
}

/// `Δ = n−3` with `γ ∈ {2, 3}`: which `γ₁₁` values occur.
pub fn suite_delta_n3(atlas: &Atlas, gamma: usize, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    atlas.require(n_max)?;
    assert!(matches!(gamma, 2 | 3), "γ target must be 2 or 3");
    let n_min = gamma + 3;
    let excluded: Vec<String> = (n_min..=8)
        .flat_map(|n| (gamma..=n).map(move |k| (k, n)))
        .filter(|&(k, n)| delta_n3_excluded(gamma, k, n))
        .map(|(k, n)| format!("({k},{n})"))
        .collect();
    let statement = format!(
        "for n ≥ {n_min} and {gamma} ≤ k ≤ n, a connected graph with Δ = n−3, γ = {gamma}, γ₁₁ = k exists iff (k,n) ∉ {{{}}}",
        excluded.join(",")
    );
    let mut out = Vec::new();

    let mut claim = Claim::new(
        &format!("delta-n3.gamma{gamma}.realizable"),
        &statement,
        format!("connected graphs, {n_min} ≤ n ≤ {n_max}"),
    );
    for n in n_min..=n_max {
        let level = atlas.order(n);
        let realized = first_by(level.iter(), |e| {
            (e.graph.max_degree() + 3 == n && e.chain.gamma == gamma).then(|| e.chain.gamma_11())
        });
        let domain: Vec<usize> = (gamma..=n).collect();
        characterize(&mut claim, &domain, |k| !delta_n3_excluded(gamma, k, n), &realized, level.len(), |k| {
            format!("(k,n) = ({k},{n})")
        });
    }
    out.push(claim.finish());

    let general = Claim::new(
        &format!("delta-n3.gamma{gamma}.general"),
        &statement,
        format!("n > {n_max}: no general construction is implemented"),
    );
    out.push(general.out_of_scope());

    let counts = [(7, 4, 2, "at most 2 leaves", 16), (8, 5, 0, "no leaves", 46)]
        .into_iter()
        .filter(|c| gamma == 3 && c.0 <= n_max);
    for (n, delta, leaves, leaf_text, expected) in counts {
        let mut claim = Claim::new(
            &format!("delta-n3.gamma3.count-n{n}"),
            &format!("there are {expected} graphs with n = {n}, Δ = {delta}, γ = 3 and {leaf_text}"),
            format!("connected graphs, n = {n}"),
        );
        let hits: Vec<&AtlasEntry> = atlas
            .order(n)
            .iter()
            .filter(|e| e.graph.max_degree() == delta && e.chain.gamma == 3 && e.graph.leaf_count() <= leaves)
            .collect();
        let examined = atlas.order(n).len();
        if hits.len() == expected {
            claim.push(Evidence::exhaustion(format!("{} classes found", hits.len()), examined));
        } else {
            claim.fail_note(format!("{} classes found among {examined}, expected {expected}", hits.len()));
        }
        for e in &hits {
            claim.push(Evidence::graph(EvidenceKind::Witness, "matching class", &e.graph, Some(&e.chain)));
        }
        out.push(claim.finish());
    }
    Ok(out)
}

/// Largest tree order checked.
const TREE_ORDER: usize = 10;

/// `Δ = 3` bounds, the cubic and tree refinements, and the certificates.
pub fn suite_delta3(atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
    atlas.require(n_max)?;
    let bull = FamilySpec::Bull.build()?;
    let scope = format!("connected graphs, n ≤ {n_max}");
    let degree3: Vec<&AtlasEntry> = atlas.up_to(n_max).filter(|e| e.graph.max_degree() == 3).collect();
    let mut out = Vec::new();

    let mut claim = Claim::new("delta3.bound", "Δ = 3 and G not the bull implies γ₁₁ ≤ n−3", scope.clone());
    let mut examined = 0;
    for e in &degree3 {
        let n = e.graph.order();
        if n == 5 && is_isomorphic(&e.graph, &bull) {
            continue;
        }
        examined += 1;
        if e.chain.gamma_11() + 3 > n {
            claim.fail("γ₁₁ > n−3", &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("classes with Δ = 3 other than the bull", examined));
    out.push(claim.finish());

    let mut claim = Claim::new("delta3.bull", "the bull has γ₁₁ = 3 = n−2", "bull");
    let chain = domination_chain(&bull)?;
    if chain.gamma_11() == 3 {
        claim.push(Evidence::graph(EvidenceKind::Construction, "bull", &bull, Some(&chain)));
    } else {
        claim.fail("γ₁₁ ≠ 3", &bull, Some(&chain));
    }
    out.push(claim.finish());

    let mut claim = Claim::new("delta3.tight", "the bound n−3 is attained by K_{1,3}", "K_{1,3}");
    let star = FamilySpec::Star(4).build()?;
    let chain = domination_chain(&star)?;
    if chain.gamma_11() == 1 {
        claim.push(Evidence::graph(EvidenceKind::Construction, "γ₁₁ = 1 = n−3", &star, Some(&chain)));
    } else {
        claim.fail("γ₁₁ ≠ n−3", &star, Some(&chain));
    }
    out.push(claim.finish());

    let mut claim = Claim::new("delta3.cubic", "cubic graphs other than K₄ have γ₁₁ ≤ n−4", scope.clone());
    let mut examined = 0;
    for e in degree3.iter().filter(|e| is_cubic(&e.graph)) {
        examined += 1;
        let n = e.graph.order();
        if n == 4 {
            claim.push(Evidence::graph(EvidenceKind::Note, "K₄ excepted", &e.graph, Some(&e.chain)));
        } else if e.chain.gamma_11() + 4 > n {
            claim.fail("γ₁₁ > n−4", &e.graph, Some(&e.chain));
        }
    }
    claim.push(Evidence::exhaustion("cubic classes", examined));
    out.push(claim.finish());

    let mut claim = Claim::new(
        "delta3.trees",
        "trees with Δ = 3 and n ≥ 7 have a perfect dominating set of size n−4",
        format!("trees, 7 ≤ n ≤ {TREE_ORDER}"),
    );
    for n in 7..=TREE_ORDER {
        let trees = enumerate(&GraphFilter::new(n).tree().with_max_degree(3), atlas.exec, &mut |_, _| {})?;
        let bad = atlas.exec.filter_map(&trees.graphs, |t| match tree_certificate(t) {
            Ok(c) if c.set.len() + 4 == n && is_k_quasiperfect(t, &c.set, 1) => None,
            Ok(c) => Some((t.clone(), format!("{:?} set of size {} fails", c.kind, c.set.len()))),
            Err(err) => Some((t.clone(), err.to_string())),
        });
        for (t, why) in bad {
            claim.fail(why, &t, None);
        }
        claim.push(Evidence::exhaustion(format!("trees of order {n} with Δ = 3"), trees.count));
    }
    out.push(claim.finish());

    let mut claim = Claim::new(
        "delta3.certificates",
        "removing a degree-3 induced cycle or a degree-2-ended induced path leaves a perfect dominating set",
        scope,
    );
    let (mut certified, mut total) = (0, 0);
    for e in &degree3 {
        let certs = find_certificates(&e.graph).expect("Δ = 3 and connected");
        certified += usize::from(!certs.is_empty());
        for c in certs {
            total += 1;
            if c.bound < e.chain.gamma_11() {
                claim.fail(format!("certificate {:?} below γ₁₁", c.vertices), &e.graph, Some(&e.chain));
            }
        }
    }
    claim.push(Evidence::exhaustion(
        format!("{total} certificates on {certified} graphs, all consistent with γ₁₁"),
        degree3.len(),
    ));
    out.push(claim.finish());
    Ok(out)
}
