//! The 0-1 program for `γ₁ₖ` and its LP-format text.
//!
//! With `N` the adjacency matrix and `X` the characteristic vector of `S`:
//!
//! ```text
//! minimize   Σ xᵢ
//! subject to N·X ≥ 1ₙ − X
//!            N·X ≤ k·1ₙ + (n−k−1)·X
//!            X ∈ {0,1}ⁿ
//! ```
//!
//! The second family is vacuous for chosen vertices (at most `n−1`
//! neighbors) and caps the chosen neighbors of every other vertex at `k`.

use super::SolveError;
use crate::graph::{Graph, VertexSet};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl Sense {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Sense::Le => lhs <= rhs,
            Sense::Ge => lhs >= rhs,
            Sense::Eq => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }
}

/// Matrix form of the program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpModel {
    pub n: usize,
    pub k: usize,
    /// Symmetric 0/1 matrix with zero diagonal.
    pub adjacency: Vec<Vec<u8>>,
}

/// One row `coeffs·X (sense) rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub coeffs: Vec<i64>,
    pub sense: Sense,
    pub rhs: i64,
}

impl IlpModel {
    pub fn new(g: &Graph, k: usize) -> Result<Self, SolveError> {
        let max = g.max_degree();
        if k == 0 || k > max {
            return Err(SolveError::InvalidK { k, max });
        }
        let n = g.order();
        let adjacency = (0..n)
            .map(|i| (0..n).map(|j| u8::from(g.has_edge(i, j))).collect())
            .collect();
        Ok(IlpModel { n, k, adjacency })
    }

    /// `dom_i` rows (N·X + X ≥ 1) followed by `qp_i` rows.
    pub fn constraints(&self) -> Vec<Constraint> {
        let n = self.n;
        let slack = (n - self.k - 1) as i64;
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut coeffs: Vec<i64> = self.adjacency[i].iter().map(|&a| i64::from(a)).collect();
            coeffs[i] = 1;
            rows.push(Constraint {
                name: format!("dom_{i}"),
                coeffs,
                sense: Sense::Ge,
                rhs: 1,
            });
        }
        for i in 0..n {
            let mut coeffs: Vec<i64> = self.adjacency[i].iter().map(|&a| i64::from(a)).collect();
            coeffs[i] = -slack;
            rows.push(Constraint {
                name: format!("qp_{i}"),
                coeffs,
                sense: Sense::Le,
                rhs: self.k as i64,
            });
        }
        rows
    }

    /// Names of violated rows; empty iff `x` is feasible.
    pub fn violated(&self, x: &[u8]) -> Vec<String> {
        assert_eq!(x.len(), self.n, "assignment length");
        self.constraints()
            .into_iter()
            .filter(|c| {
                let lhs: i64 = c.coeffs.iter().zip(x).map(|(&a, &v)| a * i64::from(v)).sum();
                !c.sense.holds(lhs, c.rhs)
            })
            .map(|c| c.name)
            .collect()
    }

    pub fn is_feasible(&self, x: &[u8]) -> bool {
        x.iter().all(|&v| v <= 1) && self.violated(x).is_empty()
    }

    pub fn is_feasible_set(&self, s: &VertexSet) -> bool {
        self.is_feasible(&s.indicator())
    }

    pub fn objective(&self, x: &[u8]) -> usize {
        x.iter().map(|&v| usize::from(v)).sum()
    }

    pub fn to_lp(&self) -> String {
        let n = self.n;
        let mut s = String::new();
        let _ = writeln!(s, "\\ {}-quasiperfect domination, n = {n}", self.k);
        s.push_str("Minimize\n obj:");
        for i in 0..n {
            let _ = write!(s, "{} x{i}", if i == 0 { "" } else { " +" });
        }
        s.push_str("\nSubject To\n");
        for c in self.constraints() {
            let _ = write!(s, " {}:", c.name);
            let mut first = true;
            for (j, &a) in c.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let sign = match (first, a < 0) {
                    (true, false) => "",
                    (true, true) => " -",
                    (false, false) => " +",
                    (false, true) => " -",
                };
                let _ = if a.abs() == 1 {
                    write!(s, "{sign} x{j}")
                } else {
                    write!(s, "{sign} {} x{j}", a.abs())
                };
                first = false;
            }
            if first {
                // an all-zero row still needs a left-hand side
                s.push_str(" 0 x0");
            }
            let _ = writeln!(s, " {} {}", c.sense.symbol(), c.rhs);
        }
        s.push_str("Binaries\n");
        for i in 0..n {
            let _ = write!(s, " x{i}");
        }
        s.push_str("\nEnd\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing End section")]
    MissingEnd,
    #[error("no value for variable {0}")]
    Unassigned(String),
    #[error("binary variable {0} has value {1}")]
    NotBinary(String, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpConstraint {
    pub name: String,
    pub terms: Vec<(String, i64)>,
    pub sense: Sense,
    pub rhs: i64,
}

/// A parsed LP file: linear objective, linear rows, binary declarations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub minimize: bool,
    pub objective: Vec<(String, i64)>,
    pub constraints: Vec<LpConstraint>,
    pub binaries: Vec<String>,
}

/// Outcome of substituting an assignment into a [`LinearProgram`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub objective: i64,
    pub violated: Vec<String>,
}

impl Evaluation {
    pub fn is_feasible(&self) -> bool {
        self.violated.is_empty()
    }
}

impl LinearProgram {
    pub fn evaluate(&self, values: &HashMap<String, i64>) -> Result<Evaluation, LpError> {
        let get = |v: &str| values.get(v).copied().ok_or_else(|| LpError::Unassigned(v.to_string()));
        for b in &self.binaries {
            let x = get(b)?;
            if x != 0 && x != 1 {
                return Err(LpError::NotBinary(b.clone(), x));
            }
        }
        let sum = |terms: &[(String, i64)]| -> Result<i64, LpError> {
            terms.iter().try_fold(0i64, |acc, (v, a)| Ok(acc + a * get(v)?))
        };
        let objective = sum(&self.objective)?;
        let mut violated = Vec::new();
        for c in &self.constraints {
            if !c.sense.holds(sum(&c.terms)?, c.rhs) {
                violated.push(c.name.clone());
            }
        }
        Ok(Evaluation { objective, violated })
    }

    /// Evaluates with `x{i}` bound to `x[i]`.
    pub fn evaluate_indicator(&self, x: &[u8]) -> Result<Evaluation, LpError> {
        let values = x.iter().enumerate().map(|(i, &v)| (format!("x{i}"), i64::from(v))).collect();
        self.evaluate(&values)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Num(i64),
    Plus,
    Minus,
    Colon,
    Cmp(Sense),
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Token>, LpError> {
    let err = |msg: String| LpError::Syntax { line, msg };
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            ':' => {
                out.push(Token::Colon);
                i += 1;
            }
            '<' | '>' | '=' => {
                let sense = match c {
                    '<' => Sense::Le,
                    '>' => Sense::Ge,
                    _ => Sense::Eq,
                };
                i += 1;
                // accept "<=", "=<", ">=", "=>", "<", ">", "="
                if i < chars.len() && matches!(chars[i], '=' | '<' | '>') {
                    let sense = match (c, chars[i]) {
                        ('=', '<') => Sense::Le,
                        ('=', '>') => Sense::Ge,
                        _ => sense,
                    };
                    out.push(Token::Cmp(sense));
                    i += 1;
                } else {
                    out.push(Token::Cmp(sense));
                }
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().map_err(|_| err(format!("number {s} too large")))?));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || "_.[]".contains(chars[i])) {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(err(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Parses `[name:] ±a x ± b y ...`, stopping at a comparison or the end.
fn parse_terms(tokens: &[Token], mut pos: usize, line: usize) -> Result<(Vec<(String, i64)>, usize), LpError> {
    let mut acc: BTreeMap<String, i64> = BTreeMap::new();
    let mut order = Vec::new();
    let mut first = true;
    while pos < tokens.len() && !matches!(tokens[pos], Token::Cmp(_)) {
        let mut sign = 1;
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                sign = -1;
                pos += 1;
            }
            _ if first => {}
            _ => {
                return Err(LpError::Syntax {
                    line,
                    msg: "expected + or - between terms".into(),
                })
            }
        }
        first = false;
        let mut coeff = 1;
        if let Some(Token::Num(a)) = tokens.get(pos) {
            coeff = *a;
            pos += 1;
        }
        match tokens.get(pos) {
            Some(Token::Ident(v)) => {
                if !acc.contains_key(v) {
                    order.push(v.clone());
                }
                *acc.entry(v.clone()).or_insert(0) += sign * coeff;
                pos += 1;
            }
            _ => {
                return Err(LpError::Syntax {
                    line,
                    msg: "expected a variable".into(),
                })
            }
        }
    }
    let terms = order.into_iter().map(|v| (v.clone(), acc[&v])).collect();
    Ok((terms, pos))
}

fn strip_label(tokens: &[Token]) -> (Option<String>, &[Token]) {
    match tokens {
        [Token::Ident(name), Token::Colon, rest @ ..] => (Some(name.clone()), rest),
        _ => (None, tokens),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Preamble,
    Objective,
    Constraints,
    Binaries,
    Ignored,
}

/// Reads the LP subset written by [`IlpModel::to_lp`]: one objective, rows
/// possibly spanning several lines, `Binaries`, optional `Bounds` and
/// `Generals` (ignored), `\` comments, and a final `End`.
pub fn parse_lp(text: &str) -> Result<LinearProgram, LpError> {
    let mut section = Section::Preamble;
    let mut minimize = true;
    let mut objective = Vec::new();
    let mut constraints = Vec::new();
    let mut binaries = Vec::new();
    let mut pending: Vec<Token> = Vec::new();
    let mut pending_line = 0;
    let mut unnamed = 0;
    let mut ended = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('\\').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let keyword = content.to_ascii_lowercase();
        let next = match keyword.as_str() {
            "minimize" | "minimise" | "min" => Some(Section::Objective),
            "maximize" | "maximise" | "max" => {
                minimize = false;
                Some(Section::Objective)
            }
            "subject to" | "such that" | "st" | "s.t." => Some(Section::Constraints),
            "binaries" | "binary" | "bin" => Some(Section::Binaries),
            "bounds" | "generals" | "general" => Some(Section::Ignored),
            "end" => {
                ended = true;
                break;
            }
            _ => None,
        };
        if let Some(next) = next {
            if !pending.is_empty() {
                return Err(LpError::Syntax {
                    line: pending_line,
                    msg: "unterminated constraint".into(),
                });
            }
            section = next;
            continue;
        }
        match section {
            Section::Preamble => {
                return Err(LpError::Syntax {
                    line,
                    msg: "content before the objective section".into(),
                })
            }
            Section::Objective => {
                let tokens = tokenize(content, line)?;
                let (_, body) = strip_label(&tokens);
                let (terms, pos) = parse_terms(body, 0, line)?;
                if pos != body.len() {
                    return Err(LpError::Syntax {
                        line,
                        msg: "comparison in objective".into(),
                    });
                }
                objective.extend(terms);
            }
            Section::Constraints => {
                if pending.is_empty() {
                    pending_line = line;
                }
                pending.extend(tokenize(content, line)?);
                // a row is complete once it ends in "<cmp> [-]number"
                let complete = matches!(pending.as_slice(), [.., Token::Cmp(_), Token::Num(_)])
                    || matches!(pending.as_slice(), [.., Token::Cmp(_), Token::Minus, Token::Num(_)]);
                if complete {
                    let (label, body) = strip_label(&pending);
                    let (terms, pos) = parse_terms(body, 0, pending_line)?;
                    let Token::Cmp(sense) = body[pos] else { unreachable!() };
                    let rhs = match &body[pos + 1..] {
                        [Token::Num(a)] => *a,
                        [Token::Minus, Token::Num(a)] => -*a,
                        _ => {
                            return Err(LpError::Syntax {
                                line: pending_line,
                                msg: "malformed right-hand side".into(),
                            })
                        }
                    };
                    let name = label.unwrap_or_else(|| {
                        unnamed += 1;
                        format!("R{unnamed}")
                    });
                    constraints.push(LpConstraint { name, terms, sense, rhs });
                    pending.clear();
                }
            }
            Section::Binaries => {
                binaries.extend(content.split_whitespace().map(str::to_string));
            }
            Section::Ignored => {}
        }
    }
    if !ended {
        return Err(LpError::MissingEnd);
    }
    if !pending.is_empty() {
        return Err(LpError::Syntax {
            line: pending_line,
            msg: "unterminated constraint".into(),
        });
    }
    Ok(LinearProgram {
        minimize,
        objective,
        constraints,
        binaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{is_k_quasiperfect, min_quasiperfect};
    use crate::graph::tests::{bull, cycle};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn model_examples() {
        let m = IlpModel::new(&cycle(5), 2).unwrap();
        let gamma_code = set(5, &[0, 2]);
        assert!(m.is_feasible_set(&gamma_code));
        assert_eq!(m.objective(&gamma_code.indicator()), 2);

        let m = IlpModel::new(&cycle(4), 1).unwrap();
        assert!(m.is_feasible(&[1; 4]));
        assert_eq!(m.objective(&[1; 4]), 4);
        assert_eq!(m.violated(&set(4, &[0, 2]).indicator()), vec!["qp_1", "qp_3"]);
        assert!(m.is_feasible_set(&set(4, &[0, 1])));

        assert!(IlpModel::new(&cycle(4), 3).is_err());
        assert!(IlpModel::new(&cycle(4), 0).is_err());
    }

    #[test]
    fn lp_text_layout() {
        let lp = IlpModel::new(&cycle(4), 1).unwrap().to_lp();
        assert!(lp.contains("Minimize\n obj: x0 + x1 + x2 + x3\n"));
        assert!(lp.contains(" dom_0: x0 + x1 + x3 >= 1\n"));
        assert!(lp.contains(" qp_0: - 2 x0 + x1 + x3 <= 1\n"));
        assert!(lp.ends_with("Binaries\n x0 x1 x2 x3\nEnd\n"));
    }

    #[test]
    fn matrix_and_text_agree_on_every_assignment() {
        for (g, k) in [(bull(), 1), (bull(), 2), (bull(), 3), (cycle(6), 1), (cycle(6), 2)] {
            let m = IlpModel::new(&g, k).unwrap();
            let lp = parse_lp(&m.to_lp()).unwrap();
            assert!(lp.minimize);
            assert_eq!(lp.constraints.len(), 2 * g.order());
            let n = g.order();
            let mut best = usize::MAX;
            for mask in 0u64..1 << n {
                let s = VertexSet::from_mask(n, mask).unwrap();
                let x = s.indicator();
                let eval = lp.evaluate_indicator(&x).unwrap();
                assert_eq!(eval.is_feasible(), m.is_feasible(&x));
                assert_eq!(eval.is_feasible(), is_k_quasiperfect(&g, &s, k));
                assert_eq!(eval.objective as usize, s.len());
                if eval.is_feasible() {
                    best = best.min(s.len());
                }
            }
            assert_eq!(best, min_quasiperfect(&g, k).unwrap().value);
        }
    }

    #[test]
    fn parser_accepts_general_layout() {
        let text = "\\ comment\nMAXIMIZE\n z: 3 a - b\nst\n c1: a + b\n   >= 1\n a - 2 b <= -1 \\ tail\nbounds\n 0 <= a <= 1\nBinary\n a b\nend\n";
        let lp = parse_lp(text).unwrap();
        assert!(!lp.minimize);
        assert_eq!(lp.objective, vec![("a".into(), 3), ("b".into(), -1)]);
        assert_eq!(lp.constraints[0].name, "c1");
        assert_eq!(lp.constraints[1].name, "R1");
        assert_eq!(lp.constraints[1].rhs, -1);
        assert_eq!(lp.constraints[1].sense, Sense::Le);
        let vals: HashMap<String, i64> = [("a".to_string(), 0), ("b".to_string(), 1)].into();
        let e = lp.evaluate(&vals).unwrap();
        assert_eq!(e.objective, -1);
        assert!(e.is_feasible());
    }

    #[test]
    fn parser_errors() {
        assert_eq!(parse_lp("Minimize\n obj: x\n"), Err(LpError::MissingEnd));
        assert!(matches!(parse_lp("x + y\nEnd\n"), Err(LpError::Syntax { line: 1, .. })));
        assert!(matches!(
            parse_lp("Minimize\n x\nSubject To\n c: x + >= 1\nEnd"),
            Err(LpError::Syntax { .. })
        ));
        assert!(matches!(
            parse_lp("Minimize\n x\nSubject To\n c: x + y\nEnd"),
            Err(LpError::Syntax { .. })
        ));
        let lp = parse_lp("Minimize\n x\nBinaries\n x\nEnd").unwrap();
        assert_eq!(lp.evaluate(&HashMap::new()), Err(LpError::Unassigned("x".into())));
        assert_eq!(
            lp.evaluate(&[("x".to_string(), 2)].into()),
            Err(LpError::NotBinary("x".into(), 2))
        );
    }
}
