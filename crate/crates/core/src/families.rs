//! Parameterized graph families and explicit constructions, with the
//! parameter values known in closed form.
//!
//! Specs have a compact text form: `cycle:9`, `biclique:2,4`,
//! `clawfreeA:2,3,6`, `spider:1,2,3`, `join:star:4,path:3`. Joins nest.

use crate::domination::{domination_chain, SolveError};
use crate::graph::{is_claw_free, Graph, GraphError};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n−1}`: `n` vertices in total.
    Star(usize),
    Biclique(usize, usize),
    /// A hub joined to `C_{n−1}`.
    Wheel(usize),
    /// `n` isolated vertices (mainly as a join operand).
    Empty(usize),
    Bull,
    /// `K_m` with one pendant vertex per clique vertex.
    CoronaComplete(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    /// `P_{n−2} ∨ K̄₂`.
    Pn2Join(usize),
    /// `P_{k−2} ∨ {a, b}` plus `n − k` pendants on `a` (`Δ = n−2`, `γ₁₁ = k`).
    PendantJoin { n: usize, k: usize },
    /// Two cliques `K_r`, `K_k` sharing a vertex, with `h − 1` pendants.
    ClawFreeA { h: usize, k: usize, n: usize },
    /// `K_{n−h}` with `n − k` pendants and `h − (n − k)` degree-2 bridges.
    ClawFreeB { h: usize, k: usize, n: usize },
    /// Disjoint paths of the given lengths hanging from one center.
    Spider(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family}: {msg}")]
    Parameters { family: &'static str, msg: String },
    #[error("{family} built a graph with {param} = {found}, expected {expected}")]
    Mismatch {
        family: &'static str,
        param: &'static str,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Closed-form parameter values; `None` where no formula is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ExpectedProfile {
    pub gamma_11: Option<usize>,
    pub gamma_12: Option<usize>,
    pub gamma: Option<usize>,
}

impl ExpectedProfile {
    fn all(v: usize) -> Self {
        Self::new(v, v, v)
    }

    fn new(gamma_11: usize, gamma_12: usize, gamma: usize) -> Self {
        ExpectedProfile {
            gamma_11: Some(gamma_11),
            gamma_12: Some(gamma_12),
            gamma: Some(gamma),
        }
    }

    pub fn is_unknown(&self) -> bool {
        self.gamma_11.is_none() && self.gamma_12.is_none() && self.gamma.is_none()
    }

    /// Compares against computed values; returns the mismatching fields.
    pub fn mismatches(&self, gamma_11: usize, gamma_12: usize, gamma: usize) -> Vec<&'static str> {
        [
            ("gamma_11", self.gamma_11, gamma_11),
            ("gamma_12", self.gamma_12, gamma_12),
            ("gamma", self.gamma, gamma),
        ]
        .into_iter()
        .filter(|&(_, want, got)| want.is_some_and(|w| w != got))
        .map(|(name, _, _)| name)
        .collect()
    }
}

fn params(family: &'static str, msg: impl Into<String>) -> FamilyError {
    FamilyError::Parameters {
        family,
        msg: msg.into(),
    }
}

fn require(ok: bool, family: &'static str, msg: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(params(family, msg))
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::Biclique(..) => "biclique",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Bull => "bull",
            FamilySpec::CoronaComplete(_) => "corona_complete",
            FamilySpec::Join(..) => "join",
            FamilySpec::Pn2Join(_) => "pn2_join",
            FamilySpec::PendantJoin { .. } => "pendant_join",
            FamilySpec::ClawFreeA { .. } => "clawfreeA",
            FamilySpec::ClawFreeB { .. } => "clawfreeB",
            FamilySpec::Spider(_) => "spider",
        }
    }

    /// Number of vertices of the built graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Pn2Join(n) => *n,
            FamilySpec::Biclique(p, q) => p + q,
            FamilySpec::Bull => 5,
            FamilySpec::CoronaComplete(m) => 2 * m,
            FamilySpec::Join(a, b) => a.order() + b.order(),
            FamilySpec::PendantJoin { n, .. } | FamilySpec::ClawFreeA { n, .. } | FamilySpec::ClawFreeB { n, .. } => *n,
            FamilySpec::Spider(legs) => 1 + legs.iter().sum::<usize>(),
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        let name = self.name();
        match *self {
            FamilySpec::Path(n) => {
                require(n >= 1, name, "needs n >= 1")?;
                Ok(Graph::new(n, &chain_edges(0, n))?)
            }
            FamilySpec::Cycle(n) => {
                require(n >= 3, name, "needs n >= 3")?;
                let mut e = chain_edges(0, n);
                e.push((n - 1, 0));
                Ok(Graph::new(n, &e)?)
            }
            FamilySpec::Complete(n) => {
                require(n >= 1, name, "needs n >= 1")?;
                Ok(Graph::empty(n)?.complement())
            }
            FamilySpec::Star(n) => {
                require(n >= 2, name, "needs n >= 2")?;
                let e: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Ok(Graph::new(n, &e)?)
            }
            FamilySpec::Biclique(p, q) => {
                require(p >= 1 && q >= 1, name, "needs p, q >= 1")?;
                Ok(Graph::empty(p)?.join(&Graph::empty(q)?)?)
            }
            FamilySpec::Wheel(n) => {
                require(n >= 4, name, "needs n >= 4 (hub plus a cycle of length n-1)")?;
                Ok(Graph::empty(1)?.join(&FamilySpec::Cycle(n - 1).build()?)?)
            }
            FamilySpec::Empty(n) => {
                require(n >= 1, name, "needs n >= 1")?;
                Ok(Graph::empty(n)?)
            }
            FamilySpec::Bull => Ok(Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])?),
            FamilySpec::CoronaComplete(m) => {
                require(m >= 1, name, "needs m >= 1")?;
                let mut e: Vec<_> = (0..m).map(|i| (i, m + i)).collect();
                e.extend((1..m).flat_map(|v| (0..v).map(move |u| (u, v))));
                Ok(Graph::new(2 * m, &e)?)
            }
            FamilySpec::Join(ref a, ref b) => Ok(a.build()?.join(&b.build()?)?),
            FamilySpec::Pn2Join(n) => {
                require(n >= 4, name, "needs n >= 4")?;
                Ok(Graph::new(n - 2, &chain_edges(0, n - 2))?.join(&Graph::empty(2)?)?)
            }
            FamilySpec::PendantJoin { n, k } => build_pendant_join(n, k),
            FamilySpec::ClawFreeA { h, k, n } => build_clawfree_a(h, k, n),
            FamilySpec::ClawFreeB { h, k, n } => build_clawfree_b(h, k, n),
            FamilySpec::Spider(ref legs) => {
                require(!legs.is_empty() && legs.iter().all(|&l| l >= 1), name, "needs legs >= 1")?;
                let mut e = Vec::new();
                let mut next = 1;
                for &len in legs {
                    e.push((0, next));
                    e.extend(chain_edges(next, len));
                    next += len;
                }
                Ok(Graph::new(next, &e)?)
            }
        }
    }

    pub fn expected_profile(&self) -> ExpectedProfile {
        let third = |n: usize| n.div_ceil(3);
        match *self {
            FamilySpec::Path(n) => ExpectedProfile::all(third(n)),
            FamilySpec::Cycle(n) => ExpectedProfile::new((2 * n).div_ceil(3) - n / 3, third(n), third(n)),
            FamilySpec::Complete(_) | FamilySpec::Star(_) | FamilySpec::Wheel(_) => ExpectedProfile::all(1),
            FamilySpec::Biclique(p, q) if p.min(q) >= 2 => ExpectedProfile::all(2),
            FamilySpec::Biclique(..) => ExpectedProfile::all(1),
            FamilySpec::Empty(1) => ExpectedProfile::all(1),
            FamilySpec::Bull => ExpectedProfile {
                gamma_11: Some(3),
                ..Default::default()
            },
            FamilySpec::CoronaComplete(m) => ExpectedProfile::all(m),
            FamilySpec::Join(ref a, ref b) => {
                let (Ok(ga), Ok(gb)) = (a.build(), b.build()) else {
                    return ExpectedProfile::default();
                };
                let gamma_11 = if ga.universal_vertices() != 0 || gb.universal_vertices() != 0 {
                    1
                } else if ga.isolated_vertices() != 0 && gb.isolated_vertices() != 0 {
                    2
                } else {
                    ga.order() + gb.order()
                };
                ExpectedProfile {
                    gamma_11: Some(gamma_11),
                    ..Default::default()
                }
            }
            // Δ = n−2 only from n = 6 on; smaller orders have a universal vertex
            FamilySpec::Pn2Join(n) if n >= 6 => ExpectedProfile::new(n, 2, 2),
            FamilySpec::PendantJoin { k, .. } => ExpectedProfile::new(k, 2, 2),
            FamilySpec::ClawFreeA { h, k, .. } | FamilySpec::ClawFreeB { h, k, .. } => ExpectedProfile::new(k, h, h),
            _ => ExpectedProfile::default(),
        }
    }
}

/// Edges of a path on `start..start+len`.
fn chain_edges(start: usize, len: usize) -> Vec<(usize, usize)> {
    (start + 1..start + len).map(|v| (v - 1, v)).collect()
}

fn build_pendant_join(n: usize, k: usize) -> Result<Graph, FamilyError> {
    const NAME: &str = "pendant_join";
    require(k >= 4 && n >= k + 2, NAME, "needs k >= 4 and n - k >= 2")?;
    // path 0..k-3, a = k-2, b = k-1, pendants k..n-1 on a
    let a = k - 2;
    let mut e = chain_edges(0, k - 2);
    for p in 0..k - 2 {
        e.push((p, a));
        e.push((p, a + 1));
    }
    e.extend((k..n).map(|x| (a, x)));
    let g = Graph::new(n, &e)?;
    let chain = domination_chain(&g)?;
    for (param, expected, found) in [
        ("max degree", n - 2, g.max_degree()),
        ("gamma", 2, chain.gamma),
        ("gamma_12", 2, chain.gamma_12()),
        ("gamma_11", k, chain.gamma_11()),
    ] {
        if expected != found {
            return Err(FamilyError::Mismatch {
                family: NAME,
                param,
                expected,
                found,
            });
        }
    }
    Ok(g)
}

fn build_clawfree_a(h: usize, k: usize, n: usize) -> Result<Graph, FamilyError> {
    const NAME: &str = "clawfreeA";
    require(2 <= h && h <= k && h + k <= n, NAME, "needs 2 <= h <= k and h + k <= n")?;
    let r = n + 2 - (h + k);
    // K_k on 0..k-1 with v = 0 and u_i = i; K_r on {0} ∪ k..k+r-2; pendants after
    let mut e = clique_edges(&(0..k).collect::<Vec<_>>());
    e.extend(clique_edges(&std::iter::once(0).chain(k..k + r - 1).collect::<Vec<_>>()));
    let first_pendant = k + r - 1;
    e.extend((1..h).map(|i| (i, first_pendant + i - 1)));
    let g = Graph::new(n, &e)?;
    debug_assert!(is_claw_free(&g));
    Ok(g)
}

fn build_clawfree_b(h: usize, k: usize, n: usize) -> Result<Graph, FamilyError> {
    const NAME: &str = "clawfreeB";
    require(
        2 <= h && h <= k && k <= n && h + k > n && 3 * h + k < 2 * n,
        NAME,
        "needs 2 <= h <= k <= n, h + k > n and 3h + k + 1 <= 2n",
    )?;
    let (r, s, t) = (n - h, n - k, h + k - n);
    // K_r on 0..r-1: u_i = i-1, v_i = s+i-1, w_i = s+t+i-1;
    // pendants r..r+s-1 on the u's, then x_1..x_t
    let mut e = clique_edges(&(0..r).collect::<Vec<_>>());
    e.extend((0..s).map(|i| (i, r + i)));
    for i in 0..t {
        let x = r + s + i;
        e.push((s + i, x));
        e.push((s + t + i, x));
    }
    let g = Graph::new(n, &e)?;
    debug_assert!(is_claw_free(&g));
    Ok(g)
}

fn clique_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        e.extend(vs[i + 1..].iter().map(|&v| (u, v)));
    }
    e
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Empty(n)
            | FamilySpec::CoronaComplete(n)
            | FamilySpec::Pn2Join(n) => write!(f, "{name}:{n}"),
            FamilySpec::Biclique(p, q) => write!(f, "{name}:{p},{q}"),
            FamilySpec::Bull => f.write_str(name),
            FamilySpec::Join(a, b) => write!(f, "{name}:{a},{b}"),
            FamilySpec::PendantJoin { n, k } => write!(f, "{name}:{n},{k}"),
            FamilySpec::ClawFreeA { h, k, n } | FamilySpec::ClawFreeB { h, k, n } => {
                write!(f, "{name}:{h},{k},{n}")
            }
            FamilySpec::Spider(legs) => {
                let legs: Vec<String> = legs.iter().map(usize::to_string).collect();
                write!(f, "{name}:{}", legs.join(","))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(s);
        let mut pos = 0;
        let spec = parse_spec(&tokens, &mut pos, s)?;
        if pos != tokens.len() {
            return Err(FamilyError::Parse(s.to_string()));
        }
        Ok(spec)
    }
}

fn tokenize(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == ':' || c == ',' {
            out.push(s[start..i].trim());
            out.push(&s[i..i + 1]);
            start = i + 1;
        }
    }
    out.push(s[start..].trim());
    out
}

fn parse_spec(t: &[&str], pos: &mut usize, src: &str) -> Result<FamilySpec, FamilyError> {
    let bad = || FamilyError::Parse(src.to_string());
    let name = *t.get(*pos).ok_or_else(bad)?;
    *pos += 1;
    let arity = match name {
        "bull" => return Ok(FamilySpec::Bull),
        "join" => {
            expect(t, pos, ":", src)?;
            let a = parse_spec(t, pos, src)?;
            expect(t, pos, ",", src)?;
            let b = parse_spec(t, pos, src)?;
            return Ok(FamilySpec::Join(Box::new(a), Box::new(b)));
        }
        "path" | "cycle" | "complete" | "star" | "wheel" | "empty" | "corona_complete" | "pn2_join" => Some(1),
        "biclique" | "pendant_join" => Some(2),
        "clawfreeA" | "clawfreeB" => Some(3),
        "spider" => None,
        "" => return Err(bad()),
        other => return Err(FamilyError::UnknownFamily(other.to_string())),
    };
    expect(t, pos, ":", src)?;
    let mut args = vec![number(t, pos, src)?];
    // fixed arity stops exactly; spider takes integers while they last
    while arity.map_or(true, |a| args.len() < a) {
        let more = t.get(*pos) == Some(&",") && t.get(*pos + 1).is_some_and(|x| x.parse::<usize>().is_ok());
        if !more {
            break;
        }
        *pos += 1;
        args.push(number(t, pos, src)?);
    }
    if arity.is_some_and(|a| args.len() != a) {
        return Err(bad());
    }
    Ok(match (name, args.as_slice()) {
        ("path", &[n]) => FamilySpec::Path(n),
        ("cycle", &[n]) => FamilySpec::Cycle(n),
        ("complete", &[n]) => FamilySpec::Complete(n),
        ("star", &[n]) => FamilySpec::Star(n),
        ("wheel", &[n]) => FamilySpec::Wheel(n),
        ("empty", &[n]) => FamilySpec::Empty(n),
        ("corona_complete", &[m]) => FamilySpec::CoronaComplete(m),
        ("pn2_join", &[n]) => FamilySpec::Pn2Join(n),
        ("biclique", &[p, q]) => FamilySpec::Biclique(p, q),
        ("pendant_join", &[n, k]) => FamilySpec::PendantJoin { n, k },
        ("clawfreeA", &[h, k, n]) => FamilySpec::ClawFreeA { h, k, n },
        ("clawfreeB", &[h, k, n]) => FamilySpec::ClawFreeB { h, k, n },
        ("spider", legs) => FamilySpec::Spider(legs.to_vec()),
        _ => unreachable!("arity checked above"),
    })
}

fn expect(t: &[&str], pos: &mut usize, want: &str, src: &str) -> Result<(), FamilyError> {
    if t.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(FamilyError::Parse(src.to_string()))
    }
}

fn number(t: &[&str], pos: &mut usize, src: &str) -> Result<usize, FamilyError> {
    let v = t
        .get(*pos)
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| FamilyError::Parse(src.to_string()))?;
    *pos += 1;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::min_quasiperfect;
    use crate::graph::{is_isomorphic, VertexSet};

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "cycle:9",
            "biclique:2,4",
            "clawfreeA:2,3,6",
            "join:star:4,path:3",
            "join:join:empty:2,empty:2,spider:1,1,4",
            "join:spider:1,2,path:3",
            "bull",
            "pendant_join:8,5",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert_eq!(
            spec("join:star:4,path:3"),
            FamilySpec::Join(Box::new(FamilySpec::Star(4)), Box::new(FamilySpec::Path(3)))
        );
        assert_eq!(spec(" cycle : 5 "), FamilySpec::Cycle(5));
    }

    #[test]
    fn parse_errors() {
        for s in ["", "cycle", "cycle:", "cycle:x", "cycle:3,4", "biclique:2", "join:path:3", "bull:1", "path:3,"] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s:?}");
        }
        assert_eq!("hexagon:6".parse::<FamilySpec>(), Err(FamilyError::UnknownFamily("hexagon".into())));
    }

    #[test]
    fn basic_shapes() {
        let c4 = Graph::empty(2).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
        assert!(is_isomorphic(&spec("cycle:4").build().unwrap(), &c4));
        assert!(is_isomorphic(&spec("join:empty:2,empty:2").build().unwrap(), &c4));
        let w = spec("wheel:7").build().unwrap();
        assert_eq!((w.order(), w.max_degree(), w.edge_count()), (7, 6, 12));
        let s = spec("star:6").build().unwrap();
        assert_eq!(s.degree_stats().leaves, 5);
        let p = spec("pn2_join:6").build().unwrap();
        assert_eq!(p.max_degree(), 4);
        assert!(spec("wheel:3").build().is_err());
        assert!(spec("cycle:2").build().is_err());
        for s in ["spider:1,1,4", "corona_complete:3", "bull", "pendant_join:7,4", "clawfreeB:3,6,8"] {
            let sp = spec(s);
            let g = sp.build().unwrap();
            assert_eq!(g.order(), sp.order(), "{s}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn clawfree_constructions_reach_their_codes() {
        let g = spec("clawfreeA:2,3,6").build().unwrap();
        assert!(is_claw_free(&g));
        let chain = domination_chain(&g).unwrap();
        assert_eq!((chain.gamma, chain.gamma_11()), (2, 3));
        // γ-code {u_1, v} and γ₁₁-code V(K_k)
        assert_eq!(chain.gamma_witness.to_vec(), vec![0, 1]);
        assert!(crate::domination::is_k_quasiperfect(&g, &VertexSet::from_vertices(6, 0..3).unwrap(), 1));

        let g = spec("clawfreeB:3,6,8").build().unwrap();
        assert!(is_claw_free(&g));
        let chain = domination_chain(&g).unwrap();
        assert_eq!((chain.gamma, chain.gamma_11()), (3, 6));
        assert!(spec("clawfreeA:2,5,6").build().is_err());
        assert!(spec("clawfreeB:3,5,7").build().is_err());
    }

    #[test]
    fn pendant_join_is_self_checking() {
        for n in 6..=9 {
            for k in 4..=n - 2 {
                let g = spec(&format!("pendant_join:{n},{k}")).build().unwrap();
                assert_eq!(min_quasiperfect(&g, 1).unwrap().value, k);
            }
        }
        assert!(spec("pendant_join:6,5").build().is_err());
        assert!(spec("pendant_join:6,3").build().is_err());
    }

    #[test]
    fn profiles() {
        assert_eq!(spec("cycle:10").expected_profile(), ExpectedProfile::new(4, 4, 4));
        assert_eq!(spec("cycle:9").expected_profile(), ExpectedProfile::new(3, 3, 3));
        assert_eq!(spec("cycle:5").expected_profile(), ExpectedProfile::new(3, 2, 2));
        assert_eq!(spec("star:7").expected_profile(), ExpectedProfile::all(1));
        assert_eq!(spec("path:9").expected_profile(), ExpectedProfile::all(3));
        assert_eq!(spec("join:path:4,path:4").expected_profile().gamma_11, Some(8));
        assert_eq!(spec("join:path:3,path:3").expected_profile().gamma_11, Some(1));
        assert_eq!(spec("join:empty:2,empty:2").expected_profile().gamma_11, Some(2));
        assert!(spec("pn2_join:5").expected_profile().is_unknown());
        assert!(spec("spider:1,2,3").expected_profile().is_unknown());
        assert_eq!(ExpectedProfile::new(3, 2, 2).mismatches(3, 3, 2), vec!["gamma_12"]);
    }

    #[test]
    fn profiles_match_solver() {
        for s in [
            "wheel:7",
            "biclique:3,5",
            "corona_complete:3",
            "pn2_join:6",
            "pn2_join:7",
            "clawfreeA:3,3,7",
            "join:path:4,path:4",
            "join:path:3,path:3",
            "bull",
        ] {
            let sp = spec(s);
            let c = domination_chain(&sp.build().unwrap()).unwrap();
            let m = sp.expected_profile().mismatches(c.gamma_11(), c.gamma_12(), c.gamma);
            assert!(m.is_empty(), "{s}: {m:?} vs {c}");
        }
    }
}
