//! Graph input: a family spec, or one graph per line (graph6 or an edge list
//! `n; u v; ...`) from a file or stdin. Blank lines and `#` comments are
//! skipped.

use crate::error::CliError;
use clap::Args;
use quasidom::families::FamilySpec;
use quasidom::graph::{graph6_decode, parse_edge_list};
use quasidom::Graph;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Build the graph from a family spec such as `cycle:5` or `clawfreeA:2,3,6`.
    #[arg(long, conflicts_with = "input")]
    pub spec: Option<String>,
    /// Read graphs from this file instead of stdin.
    #[arg(short, long)]
    pub input: Option<PathBuf>,
}

impl GraphInput {
    pub fn read(&self) -> Result<Vec<Graph>, CliError> {
        if let Some(spec) = &self.spec {
            let spec: FamilySpec = spec.parse()?;
            return Ok(vec![spec.build()?]);
        }
        let text = match &self.input {
            Some(path) => fs::read_to_string(path)?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        let graphs = parse_graphs(&text)?;
        if graphs.is_empty() {
            return Err(CliError::Input("no graphs given".into()));
        }
        Ok(graphs)
    }
}

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, CliError> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(no, line)| parse_line(line).map_err(|msg| CliError::Input(format!("line {no}: {msg}"))))
        .collect()
}

fn parse_line(line: &str) -> Result<Graph, String> {
    let edge_list = line.contains(';') || line.bytes().all(|b| b.is_ascii_digit());
    if edge_list {
        parse_edge_list(line).map_err(|e| e.to_string())
    } else {
        graph6_decode(line).map_err(|e| e.to_string())
    }
}
