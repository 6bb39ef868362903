//! Executable claim suites over constructions and exhaustive enumeration.
//!
//! Each suite returns one [`ClaimResult`] per claim. A universally
//! quantified claim is reported `verified` only when its whole domain (as
//! stated in `scope`) was enumerated; any violation is reported `refuted`
//! with the offending graph and its chain.

mod classes;
mod extremal;
mod technical;

use crate::domination::{domination_chain, DominationChain, SolveError};
use crate::enumerate::{connected_graphs_up_to, EnumerateError};
use crate::families::FamilyError;
use crate::graph::{graph6_encode, Graph, GraphError};
use crate::par::Exec;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

pub use classes::{suite_clawfree, suite_clawfree_scan, suite_join_cograph};
pub use extremal::{suite_delta3, suite_delta_n2, suite_delta_n3, suite_short_chain};
pub use technical::suite_technical;

/// Largest order held in an [`Atlas`].
pub const MAX_ATLAS_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{what} = {value} exceeds the limit {limit}")]
    Limit { what: &'static str, value: usize, limit: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Refuted,
    OutOfScope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvidenceKind {
    Witness,
    Construction,
    Counterexample,
    Exhaustion,
    Note,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    /// `γ₁₁, …, γ₁Δ`.
    pub values: Vec<usize>,
    pub gamma: usize,
}

impl From<&DominationChain> for ChainSummary {
    fn from(c: &DominationChain) -> Self {
        ChainSummary {
            values: c.values.clone(),
            gamma: c.gamma,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub examined: Option<usize>,
}

impl Evidence {
    pub fn note(detail: impl Into<String>) -> Self {
        Evidence {
            kind: EvidenceKind::Note,
            detail: detail.into(),
            graph6: None,
            chain: None,
            examined: None,
        }
    }

    pub fn exhaustion(detail: impl Into<String>, examined: usize) -> Self {
        Evidence {
            kind: EvidenceKind::Exhaustion,
            examined: Some(examined),
            ..Evidence::note(detail)
        }
    }

    pub fn graph(kind: EvidenceKind, detail: impl Into<String>, g: &Graph, chain: Option<&DominationChain>) -> Self {
        Evidence {
            kind,
            graph6: Some(graph6_encode(g)),
            chain: chain.map(ChainSummary::from),
            ..Evidence::note(detail)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    /// The claim being checked, in words.
    #[serde(rename = "paper_ref")]
    pub statement: String,
    pub scope: String,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ClaimResult {
    pub fn is_refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Evidence> {
        self.evidence.iter().filter(|e| e.kind == EvidenceKind::Counterexample)
    }
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Verified => "verified",
            Verdict::Refuted => "REFUTED",
            Verdict::OutOfScope => "out-of-scope",
        };
        write!(f, "{:<12} {} [{}] ({:.2}s)", verdict, self.claim_id, self.scope, self.elapsed.as_secs_f64())
    }
}

/// Builds claim results while timing them.
pub(crate) struct Claim {
    id: String,
    statement: String,
    scope: String,
    evidence: Vec<Evidence>,
    failures: usize,
    started: Instant,
}

/// Counterexamples listed per claim; the rest are only counted.
const MAX_COUNTEREXAMPLES: usize = 25;

impl Claim {
    pub(crate) fn new(id: &str, statement: &str, scope: impl Into<String>) -> Self {
        Claim {
            id: id.to_string(),
            statement: statement.to_string(),
            scope: scope.into(),
            evidence: Vec::new(),
            failures: 0,
            started: Instant::now(),
        }
    }

    pub(crate) fn push(&mut self, e: Evidence) {
        self.evidence.push(e);
    }

    pub(crate) fn fail(&mut self, detail: impl Into<String>, g: &Graph, chain: Option<&DominationChain>) {
        self.failures += 1;
        if self.failures <= MAX_COUNTEREXAMPLES {
            self.evidence
                .push(Evidence::graph(EvidenceKind::Counterexample, detail, g, chain));
        }
    }

    /// A failure with no single graph to show (e.g. a missing class).
    pub(crate) fn fail_note(&mut self, detail: impl Into<String>) {
        self.failures += 1;
        self.evidence.push(Evidence {
            kind: EvidenceKind::Counterexample,
            ..Evidence::note(detail)
        });
    }

    pub(crate) fn finish(mut self) -> ClaimResult {
        if self.failures > MAX_COUNTEREXAMPLES {
            self.evidence.push(Evidence::note(format!(
                "{} counterexamples in total, first {MAX_COUNTEREXAMPLES} listed",
                self.failures
            )));
        }
        let verdict = if self.failures > 0 {
            Verdict::Refuted
        } else {
            Verdict::Verified
        };
        self.done(verdict)
    }

    pub(crate) fn out_of_scope(self) -> ClaimResult {
        self.done(Verdict::OutOfScope)
    }

    fn done(self, verdict: Verdict) -> ClaimResult {
        ClaimResult {
            claim_id: self.id,
            statement: self.statement,
            scope: self.scope,
            verdict,
            evidence: self.evidence,
            elapsed: self.started.elapsed(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AtlasEntry {
    pub graph: Graph,
    pub chain: DominationChain,
}

/// Every connected class up to some order with its full chain.
#[derive(Debug, Clone)]
pub struct Atlas {
    levels: Vec<Vec<AtlasEntry>>,
    pub exec: Exec,
}

impl Atlas {
    pub fn build(n_max: usize, exec: Exec) -> Result<Self, VerifyError> {
        if n_max > MAX_ATLAS_ORDER {
            return Err(VerifyError::Limit {
                what: "n_max",
                value: n_max,
                limit: MAX_ATLAS_ORDER,
            });
        }
        let graphs = connected_graphs_up_to(n_max.max(1), exec)?;
        let mut levels = Vec::with_capacity(graphs.len());
        for level in graphs {
            let chains = exec.map(&level, domination_chain);
            let entries = level
                .into_iter()
                .zip(chains)
                .map(|(graph, chain)| Ok(AtlasEntry { graph, chain: chain? }))
                .collect::<Result<Vec<_>, SolveError>>()?;
            levels.push(entries);
        }
        Ok(Atlas { levels, exec })
    }

    pub fn n_max(&self) -> usize {
        self.levels.len()
    }

    /// Classes of order `n`, in label order.
    pub fn order(&self, n: usize) -> &[AtlasEntry] {
        assert!(n >= 1 && n <= self.n_max(), "order {n} not in the atlas");
        &self.levels[n - 1]
    }

    pub fn up_to(&self, n_max: usize) -> impl Iterator<Item = &AtlasEntry> {
        self.levels[..n_max.min(self.n_max())].iter().flatten()
    }

    fn require(&self, n_max: usize) -> Result<(), VerifyError> {
        if n_max > self.n_max() {
            return Err(VerifyError::Limit {
                what: "n_max",
                value: n_max,
                limit: self.n_max(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    ShortChain,
    DeltaN2,
    DeltaN3,
    Delta3,
    JoinCograph,
    ClawFree,
    ClawFreeScan,
    Technical,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::ShortChain,
        Suite::DeltaN2,
        Suite::DeltaN3,
        Suite::Delta3,
        Suite::JoinCograph,
        Suite::ClawFree,
        Suite::ClawFreeScan,
        Suite::Technical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ShortChain => "short-chain",
            Suite::DeltaN2 => "delta-n2",
            Suite::DeltaN3 => "delta-n3",
            Suite::Delta3 => "delta3",
            Suite::JoinCograph => "join-cograph",
            Suite::ClawFree => "clawfree",
            Suite::ClawFreeScan => "clawfree-scan",
            Suite::Technical => "technical",
        }
    }

    /// Default ceiling: the exhaustion order, except for the join suite
    /// (order of the join) and the scan (largest order scanned).
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::ClawFree | Suite::Technical => 7,
            Suite::JoinCograph | Suite::ClawFreeScan => 9,
            _ => 8,
        }
    }

    /// Atlas order the suite reads.
    fn atlas_order(self, n_max: usize) -> usize {
        match self {
            Suite::JoinCograph => n_max.saturating_sub(1).clamp(1, MAX_ATLAS_ORDER),
            Suite::ClawFreeScan => 1,
            _ => n_max,
        }
    }

    pub fn run(self, atlas: &Atlas, n_max: usize) -> Result<Vec<ClaimResult>, VerifyError> {
        match self {
            Suite::ShortChain => suite_short_chain(atlas, n_max),
            Suite::DeltaN2 => suite_delta_n2(atlas, n_max),
            Suite::DeltaN3 => {
                let mut out = suite_delta_n3(atlas, 2, n_max)?;
                out.extend(suite_delta_n3(atlas, 3, n_max)?);
                Ok(out)
            }
            Suite::Delta3 => suite_delta3(atlas, n_max),
            Suite::JoinCograph => suite_join_cograph(atlas, n_max),
            Suite::ClawFree => suite_clawfree(atlas, n_max),
            Suite::ClawFreeScan => suite_clawfree_scan(n_max, atlas.exec),
            Suite::Technical => suite_technical(atlas, n_max),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Runs the suites over one shared atlas. `n_max` overrides every suite's
/// default ceiling.
pub fn run_suites(
    suites: &[Suite],
    n_max: Option<usize>,
    exec: Exec,
) -> Result<Vec<(Suite, Vec<ClaimResult>)>, VerifyError> {
    let ceiling = |s: Suite| n_max.unwrap_or_else(|| s.default_n_max());
    let order = suites.iter().map(|&s| s.atlas_order(ceiling(s))).max().unwrap_or(1);
    let atlas = Atlas::build(order, exec)?;
    suites
        .iter()
        .map(|&s| Ok((s, s.run(&atlas, ceiling(s))?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn claim_json_shape() {
        let mut c = Claim::new("x.y", "every graph is fine", "n <= 3");
        c.push(Evidence::exhaustion("checked", 4));
        let r = c.finish();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["claim_id", "paper_ref", "scope", "verdict", "evidence", "elapsed"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["verdict"], "verified");
        assert_eq!(v["evidence"][0]["kind"], "exhaustion");
        assert!(v["evidence"][0].get("graph6").is_none());
    }

    #[test]
    fn failures_refute_and_are_capped() {
        let g = Graph::empty(1).unwrap();
        let mut c = Claim::new("x", "s", "n = 1");
        for _ in 0..30 {
            c.fail("bad", &g, None);
        }
        let r = c.finish();
        assert!(r.is_refuted());
        assert_eq!(r.counterexamples().count(), MAX_COUNTEREXAMPLES);
    }

    #[test]
    fn atlas_limits() {
        assert!(matches!(Atlas::build(9, Exec::Sequential), Err(VerifyError::Limit { .. })));
        let a = Atlas::build(4, Exec::Sequential).unwrap();
        assert_eq!(a.order(4).len(), 6);
        assert_eq!(a.up_to(3).count(), 4);
        assert!(a.require(5).is_err());
    }

    fn verdicts(claims: &[ClaimResult]) -> Vec<(&str, Verdict)> {
        claims.iter().map(|c| (c.claim_id.as_str(), c.verdict)).collect()
    }

    #[test]
    fn small_suites_verdicts() {
        let atlas = Atlas::build(7, Exec::Sequential).unwrap();
        for s in [Suite::ShortChain, Suite::DeltaN2, Suite::Delta3, Suite::ClawFree] {
            let claims = s.run(&atlas, 7).unwrap();
            assert!(claims.iter().all(|c| c.verdict == Verdict::Verified), "{s}: {:?}", verdicts(&claims));
        }
        let n3 = Suite::DeltaN3.run(&atlas, 7).unwrap();
        assert_eq!(
            verdicts(&n3),
            vec![
                ("delta-n3.gamma2.realizable", Verdict::Verified),
                ("delta-n3.gamma2.general", Verdict::OutOfScope),
                ("delta-n3.gamma3.realizable", Verdict::Verified),
                ("delta-n3.gamma3.general", Verdict::OutOfScope),
                ("delta-n3.gamma3.count-n7", Verdict::Verified),
            ]
        );
        let joins = Suite::JoinCograph.run(&atlas, 7).unwrap();
        assert!(joins.iter().all(|c| c.verdict == Verdict::Verified));
    }

    #[test]
    fn leaf_bound_fails_only_on_k2() {
        let atlas = Atlas::build(6, Exec::Sequential).unwrap();
        let claims = suite_technical(&atlas, 6).unwrap();
        for c in &claims {
            if c.claim_id == "technical.leaves" {
                let bad: Vec<_> = c.counterexamples().map(|e| e.graph6.as_deref().unwrap()).collect();
                assert_eq!(bad, vec!["A_"]);
            } else {
                assert_eq!(c.verdict, Verdict::Verified, "{}", c.claim_id);
            }
        }
    }

    #[test]
    fn suites_are_deterministic_and_evidence_reloads() {
        use crate::graph::graph6_decode;
        let atlas = Atlas::build(6, Exec::Parallel).unwrap();
        let strip = |v: Vec<ClaimResult>| v.into_iter().map(|c| (c.claim_id, c.verdict, c.evidence)).collect::<Vec<_>>();
        let a = strip(suite_delta_n2(&atlas, 6).unwrap());
        let sequential = Atlas::build(6, Exec::Sequential).unwrap();
        assert_eq!(a, strip(suite_delta_n2(&sequential, 6).unwrap()));
        for (_, _, evidence) in &a {
            for e in evidence {
                if let (Some(g6), Some(chain)) = (&e.graph6, &e.chain) {
                    let g = graph6_decode(g6).unwrap();
                    assert_eq!(&ChainSummary::from(&domination_chain(&g).unwrap()), chain);
                }
            }
        }
    }

    #[test]
    fn run_suites_respects_limits() {
        assert!(run_suites(&[Suite::ShortChain], Some(9), Exec::Sequential).is_err());
        assert!(run_suites(&[Suite::ClawFreeScan], Some(10), Exec::Sequential).is_err());
        let r = run_suites(&[Suite::ShortChain, Suite::JoinCograph], Some(6), Exec::Sequential).unwrap();
        assert_eq!(r.len(), 2);
    }
}
