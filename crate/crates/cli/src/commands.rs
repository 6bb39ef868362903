use crate::error::CliError;
use crate::input::GraphInput;
use clap::{Args, ValueEnum};
use quasidom::domination::{
    domination_chain_with, domination_number_with, find_certificates, min_quasiperfect_with, symbol,
    tree_certificate, Certificate, CertificateError, IlpModel, SolveOptions,
};
use quasidom::enumerate::{enumerate, witness_search, GraphFilter, GraphParams, WitnessOutcome};
use quasidom::families::{ExpectedProfile, FamilySpec};
use quasidom::graph::{format_edge_list, graph6_encode, is_tree};
use quasidom::verify::{run_suites, ClaimResult, EvidenceKind, Suite, Verdict};
use quasidom::{Exec, VertexSet};
use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

pub struct Ctx<'a> {
    pub json: bool,
    pub exec: Exec,
    pub out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json_line<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer(&mut *self.out, value)?;
        writeln!(self.out)?;
        Ok(())
    }
}

#[derive(Debug, Args)]
pub struct TimeLimit {
    /// Abort a single solve after this many seconds (exit 3).
    #[arg(long, value_name = "SECS")]
    pub time_limit: Option<f64>,
}

impl TimeLimit {
    fn options(&self) -> Result<SolveOptions, CliError> {
        let time_limit = match self.time_limit {
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(CliError::Input(format!("time limit {s} must be positive"))),
            None => None,
        };
        Ok(SolveOptions { time_limit })
    }
}

#[derive(Serialize)]
struct ComputeLine {
    graph6: String,
    n: usize,
    k: Option<usize>,
    value: usize,
    witness: VertexSet,
    nodes_expanded: u64,
}

/// `γ₁ₖ` for the given `k`, or `γ` without one.
pub fn compute(ctx: &mut Ctx, input: &GraphInput, k: Option<usize>, limit: &TimeLimit) -> Result<(), CliError> {
    let opts = limit.options()?;
    for g in input.read()? {
        let sol = match k {
            Some(k) => min_quasiperfect_with(&g, k, &opts)?,
            None => domination_number_with(&g, &opts)?,
        };
        let line = ComputeLine {
            graph6: graph6_encode(&g),
            n: g.order(),
            k: k.map(|_| sol.k),
            value: sol.value,
            witness: sol.witness,
            nodes_expanded: sol.nodes_expanded,
        };
        if ctx.json {
            ctx.json_line(&line)?;
        } else {
            let name = line.k.map_or_else(|| "γ".to_string(), symbol);
            writeln!(ctx.out, "{}\t{name}={}\t{}", line.graph6, line.value, line.witness)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ChainLine {
    graph6: String,
    n: usize,
    max_degree: usize,
    values: Vec<usize>,
    witnesses: Vec<VertexSet>,
    gamma: usize,
    gamma_witness: VertexSet,
    short: bool,
}

pub fn chain(ctx: &mut Ctx, input: &GraphInput, limit: &TimeLimit) -> Result<(), CliError> {
    let opts = limit.options()?;
    for g in input.read()? {
        let c = domination_chain_with(&g, &opts)?;
        let g6 = graph6_encode(&g);
        if ctx.json {
            ctx.json_line(&ChainLine {
                graph6: g6,
                n: c.n,
                max_degree: c.max_degree,
                short: c.is_short(),
                values: c.values,
                witnesses: c.witnesses,
                gamma: c.gamma,
                gamma_witness: c.gamma_witness,
            })?;
            continue;
        }
        writeln!(ctx.out, "{g6}\t{c}")?;
        for (i, (v, w)) in c.values.iter().zip(&c.witnesses).enumerate() {
            writeln!(ctx.out, "\t{}\t{v}\t{w}", symbol(i + 1))?;
        }
        writeln!(ctx.out, "\tγ\t{}\t{}", c.gamma, c.gamma_witness)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

#[derive(Serialize)]
struct GenLine {
    spec: String,
    graph6: String,
    n: usize,
    edges: usize,
    expected: ExpectedProfile,
}

pub fn gen(ctx: &mut Ctx, spec: &str, format: Format) -> Result<(), CliError> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    if ctx.json {
        return ctx.json_line(&GenLine {
            spec: spec.to_string(),
            graph6: graph6_encode(&g),
            n: g.order(),
            edges: g.edge_count(),
            expected: spec.expected_profile(),
        });
    }
    let text = match format {
        Format::Graph6 => graph6_encode(&g),
        Format::Edges => format_edge_list(&g),
    };
    writeln!(ctx.out, "{text}")?;
    Ok(())
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    /// Order of the generated connected graphs.
    #[arg(short, long)]
    pub n: usize,
    /// Exact maximum degree.
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Exact domination number.
    #[arg(long)]
    pub gamma: Option<usize>,
    /// Exact number of degree-1 vertices.
    #[arg(long)]
    pub leaves: Option<usize>,
    /// At most this many degree-1 vertices.
    #[arg(long)]
    pub max_leaves: Option<usize>,
    /// No induced K₁,₃.
    #[arg(long)]
    pub claw_free: bool,
    /// No induced P₄.
    #[arg(long)]
    pub cograph: bool,
    /// Every vertex has degree 3.
    #[arg(long)]
    pub cubic: bool,
    /// Acyclic (n − 1 edges).
    #[arg(long)]
    pub tree: bool,
}

impl FilterArgs {
    fn filter(&self) -> GraphFilter {
        GraphFilter {
            order: self.n,
            max_degree: self.max_degree,
            gamma: self.gamma,
            max_leaves: self.max_leaves,
            leaves: self.leaves,
            claw_free: self.claw_free,
            cograph: self.cograph,
            cubic: self.cubic,
            tree: self.tree,
        }
    }
}

#[derive(Serialize)]
struct EnumerateDoc<'a> {
    filter: &'a GraphFilter,
    count: usize,
    /// Seconds.
    elapsed: f64,
    graphs: &'a [String],
}

pub fn enumerate_cmd(ctx: &mut Ctx, args: &FilterArgs, count_only: bool) -> Result<(), CliError> {
    let filter = args.filter();
    let report = enumerate(&filter, ctx.exec, &mut |_, _| {})?;
    if ctx.json {
        let graphs: &[String] = if count_only { &[] } else { &report.labels };
        return ctx.json_line(&EnumerateDoc {
            filter: &filter,
            count: report.count,
            elapsed: report.elapsed.as_secs_f64(),
            graphs,
        });
    }
    if count_only {
        writeln!(ctx.out, "{}", report.count)?;
        return Ok(());
    }
    for label in &report.labels {
        writeln!(ctx.out, "{label}")?;
    }
    eprintln!("count: {} ({:.2}s)", report.count, report.elapsed.as_secs_f64());
    Ok(())
}

#[derive(Serialize)]
struct WitnessDoc {
    found: bool,
    graph6: Option<String>,
    params: Option<GraphParams>,
    examined: usize,
}

/// First class passing the filter with the requested `γ₁₁`.
pub fn witness(ctx: &mut Ctx, args: &FilterArgs, gamma11: Option<usize>) -> Result<(), CliError> {
    let outcome = witness_search(&args.filter(), |p| gamma11.map_or(true, |k| p.gamma_11 == k), ctx.exec)?;
    let doc = match &outcome {
        WitnessOutcome::Found { graph, params, examined } => WitnessDoc {
            found: true,
            graph6: Some(graph6_encode(graph)),
            params: Some(*params),
            examined: *examined,
        },
        WitnessOutcome::Absent { examined } => WitnessDoc {
            found: false,
            graph6: None,
            params: None,
            examined: *examined,
        },
    };
    if ctx.json {
        return ctx.json_line(&doc);
    }
    match doc.graph6 {
        Some(g6) => writeln!(ctx.out, "{g6}")?,
        None => writeln!(ctx.out, "none")?,
    }
    eprintln!("examined: {}", doc.examined);
    Ok(())
}

#[derive(Serialize)]
struct SuiteDoc<'a> {
    suite: &'a str,
    claims: &'a [ClaimResult],
}

pub fn verify(ctx: &mut Ctx, suite: &str, n_max: Option<usize>, report: Option<&PathBuf>) -> Result<(), CliError> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let results = run_suites(&suites, n_max, ctx.exec)?;
    let docs: Vec<SuiteDoc> = results
        .iter()
        .map(|(s, claims)| SuiteDoc { suite: s.name(), claims })
        .collect();
    if let Some(path) = report {
        fs::write(path, serde_json::to_string_pretty(&docs)?)?;
    }
    let mut refuted = 0;
    for doc in &docs {
        refuted += doc.claims.iter().filter(|c| c.is_refuted()).count();
        if ctx.json {
            ctx.json_line(doc)?;
            continue;
        }
        writeln!(ctx.out, "== {}", doc.suite)?;
        for c in doc.claims {
            writeln!(ctx.out, "{c}")?;
            if c.verdict == Verdict::Verified {
                continue;
            }
            for e in c.evidence.iter().filter(|e| e.kind != EvidenceKind::Witness || c.verdict == Verdict::OutOfScope) {
                match (&e.graph6, e.examined) {
                    (Some(g6), _) => writeln!(ctx.out, "    {} {g6}", e.detail)?,
                    (None, Some(count)) => writeln!(ctx.out, "    {count} {}", e.detail)?,
                    (None, None) => writeln!(ctx.out, "    {}", e.detail)?,
                }
            }
        }
    }
    if refuted > 0 {
        return Err(CliError::Refuted(refuted));
    }
    Ok(())
}

pub fn export_ilp(ctx: &mut Ctx, input: &GraphInput, k: usize, output: Option<&PathBuf>) -> Result<(), CliError> {
    let graphs = input.read()?;
    if graphs.len() != 1 {
        return Err(CliError::Input(format!("export-ilp takes one graph, got {}", graphs.len())));
    }
    let g = &graphs[0];
    if !g.is_connected() {
        return Err(CliError::Input("graph is disconnected".into()));
    }
    let model = IlpModel::new(g, k)?;
    let lp = model.to_lp();
    match output {
        Some(path) => fs::write(path, &lp)?,
        None if !ctx.json => write!(ctx.out, "{lp}")?,
        None => {}
    }
    if ctx.json {
        #[derive(Serialize)]
        struct LpDoc<'a> {
            graph6: String,
            n: usize,
            k: usize,
            constraints: usize,
            path: Option<&'a PathBuf>,
            lp: Option<&'a str>,
        }
        ctx.json_line(&LpDoc {
            graph6: graph6_encode(g),
            n: g.order(),
            k,
            constraints: model.constraints().len(),
            path: output,
            lp: output.is_none().then_some(lp.as_str()),
        })?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CertificateDoc {
    graph6: String,
    certificates: Vec<Certificate>,
}

/// Degree-3 certificates, plus the tree construction for trees of order ≥ 7.
pub fn certificate(ctx: &mut Ctx, input: &GraphInput) -> Result<(), CliError> {
    for g in input.read()? {
        let mut certificates = find_certificates(&g)?;
        if is_tree(&g) {
            match tree_certificate(&g) {
                Ok(c) => certificates.push(c),
                Err(CertificateError::TooSmall(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        let doc = CertificateDoc {
            graph6: graph6_encode(&g),
            certificates,
        };
        if ctx.json {
            ctx.json_line(&doc)?;
            continue;
        }
        if doc.certificates.is_empty() {
            writeln!(ctx.out, "{}\tnone", doc.graph6)?;
        }
        for c in &doc.certificates {
            writeln!(
                ctx.out,
                "{}\t{}\tremoved {:?}\tset {}\tγ₁₁ ≤ {}",
                doc.graph6,
                kind_name(c),
                c.vertices,
                c.set,
                c.bound
            )?;
        }
    }
    Ok(())
}

fn kind_name(c: &Certificate) -> String {
    serde_json::to_value(c.kind)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}
