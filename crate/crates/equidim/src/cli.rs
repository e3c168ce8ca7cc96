//! Library side of the command-line surface: family specs, result
//! records with a JSON-lines cache, the grid q-table, and the report
//! formatting used by the `equidim` binary. All output uses 1-based
//! coordinate labels.

use crate::constructions::{self, ClosedFamily};
use crate::equalizer::{bisector, is_equalizer_set};
use crate::error::{Error, Result};
use crate::graph::{
    all_pairs_distances, cartesian_product, complete, cycle, hypercube, load_graph, path,
    save_graph, Graph, Label, VertexSet,
};
use crate::solver::{solve_exact, Solution, Strategy};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Duration;

/// Exit codes shared by every subcommand.
pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILURE: i32 = 2;
    pub const TIMEOUT: i32 = 3;
    pub const INPUT_ERROR: i32 = 4;
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Timeout { .. } => exit_code::TIMEOUT,
        Error::CacheCorrupt(_) => exit_code::VERIFICATION_FAILURE,
        _ => exit_code::INPUT_ERROR,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// A graph family instance nameable on the command line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path(u32),
    Cycle(u32),
    Complete(u32),
    Hypercube(u32),
    Prism(u32),
    Grid(u32, u32),
    Hamming(u32, u32),
}

impl FamilySpec {
    /// Parses `name` plus positional params, e.g. `grid 3 3`.
    pub fn parse(name: &str, params: &[u32]) -> Result<FamilySpec> {
        let one = || -> Result<u32> {
            match params {
                [n] => Ok(*n),
                _ => Err(Error::Parameter(format!(
                    "{name} takes one parameter, got {}",
                    params.len()
                ))),
            }
        };
        let two = || -> Result<(u32, u32)> {
            match params {
                [a, b] => Ok((*a, *b)),
                _ => Err(Error::Parameter(format!(
                    "{name} takes two parameters, got {}",
                    params.len()
                ))),
            }
        };
        match name {
            "path" => Ok(FamilySpec::Path(one()?)),
            "cycle" => Ok(FamilySpec::Cycle(one()?)),
            "complete" => Ok(FamilySpec::Complete(one()?)),
            "hypercube" => Ok(FamilySpec::Hypercube(one()?)),
            "prism" => Ok(FamilySpec::Prism(one()?)),
            "grid" => {
                let (k, n) = two()?;
                Ok(FamilySpec::Grid(k, n))
            }
            "hamming" => {
                let (n, m) = two()?;
                Ok(FamilySpec::Hamming(n, m))
            }
            _ => Err(Error::Parameter(format!(
                "unknown family {name:?} (expected path, cycle, complete, hypercube, prism, grid, hamming)"
            ))),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Hypercube(n) => hypercube(n),
            FamilySpec::Prism(n) => cartesian_product(&cycle(n)?, &complete(2)?),
            FamilySpec::Grid(k, n) => cartesian_product(&path(k)?, &path(n)?),
            FamilySpec::Hamming(n, m) => cartesian_product(&complete(n)?, &complete(m)?),
        }
    }

}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Hypercube(n) => write!(f, "hypercube {n}"),
            FamilySpec::Prism(n) => write!(f, "prism {n}"),
            FamilySpec::Grid(k, n) => write!(f, "grid {k} {n}"),
            FamilySpec::Hamming(n, m) => write!(f, "hamming {n} {m}"),
        }
    }
}

/// Graph source: a named family or a graph file.
#[derive(Clone, Debug)]
pub enum GraphInput {
    Family(FamilySpec),
    File(PathBuf),
}

impl GraphInput {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphInput::Family(spec) => spec.build(),
            GraphInput::File(path) => load_graph(path),
        }
    }

    /// Stable cache key: the family descriptor, or a content hash for
    /// files.
    pub fn descriptor(&self) -> Result<String> {
        match self {
            GraphInput::Family(spec) => Ok(spec.to_string()),
            GraphInput::File(p) => {
                let bytes = std::fs::read(p)?;
                let mut hasher = Sha256::new();
                hasher.update(&bytes);
                Ok(format!("file:{:x}", hasher.finalize()))
            }
        }
    }
}

/// Parses a whitespace- or comma-separated list of labels, with tuples
/// written as `(i,j)`.
pub fn parse_label_list(input: &str) -> Result<Vec<Label>> {
    let mut labels = Vec::new();
    let mut rest = input.trim();
    while !rest.is_empty() {
        if let Some(stripped) = rest.strip_prefix('(') {
            let end = stripped
                .find(')')
                .ok_or_else(|| Error::Parameter(format!("unbalanced parenthesis in {input:?}")))?;
            labels.push(Label::parse(&stripped[..end])?);
            rest = stripped[end + 1..].trim_start_matches([' ', ','].as_ref()).trim();
        } else {
            let end = rest.find([' ', ','].as_ref()).unwrap_or(rest.len());
            labels.push(Label::parse(&rest[..end])?);
            rest = rest[end..].trim_start_matches([' ', ','].as_ref()).trim();
        }
    }
    if labels.is_empty() {
        return Err(Error::Parameter("empty label list".into()));
    }
    Ok(labels)
}

/// Output of one subcommand: text for stdout plus the process exit code.
#[derive(Debug)]
pub struct CmdOutcome {
    pub stdout: String,
    pub code: i32,
}

impl CmdOutcome {
    fn ok(stdout: String) -> Self {
        CmdOutcome {
            stdout,
            code: exit_code::SUCCESS,
        }
    }
}

/// Writes a family graph in the text graph format.
pub fn cmd_gen(spec: &FamilySpec, out_path: &Path) -> Result<CmdOutcome> {
    let g = spec.build()?;
    save_graph(&g, out_path)?;
    Ok(CmdOutcome::ok(format!(
        "wrote {} ({} vertices, {} edges) to {}\n",
        spec,
        g.order(),
        g.edge_count(),
        out_path.display()
    )))
}

fn labels_json(g: &Graph, set: &VertexSet) -> serde_json::Value {
    serde_json::Value::Array(
        g.labels_of(set)
            .iter()
            .map(|l| serde_json::Value::Array(l.0.iter().map(|&c| c.into()).collect()))
            .collect(),
    )
}

fn labels_text(g: &Graph, set: &VertexSet) -> String {
    g.labels_of(set)
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Solves one instance and renders the report; timeouts render the best
/// known bounds and exit with the timeout code.
pub fn cmd_solve(
    input: &GraphInput,
    strategy: Strategy,
    budget: Duration,
    format: OutputFormat,
) -> Result<CmdOutcome> {
    let descriptor = input.descriptor()?;
    let g = input.build()?;
    let d = all_pairs_distances(&g);
    match solve_exact(&g, &d, strategy, budget) {
        Ok(sol) => {
            let verified = is_equalizer_set(&d, &sol.basis).is_equalizer;
            assert!(verified, "solver returned a non-equalizer basis");
            let out = match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "graph": descriptor,
                        "xi": sol.xi,
                        "basis": labels_json(&g, &sol.basis),
                        "strategy": sol.strategy.as_str(),
                        "nodes": sol.stats.nodes,
                        "millis": sol.stats.millis,
                        "verified": verified,
                    });
                    format!("{value}\n")
                }
                _ => format!(
                    "graph: {}\nxi: {}\nbasis: {}\nstrategy: {}\nnodes: {}\nmillis: {}\nverified: {}\n",
                    descriptor,
                    sol.xi,
                    labels_text(&g, &sol.basis),
                    sol.strategy.as_str(),
                    sol.stats.nodes,
                    sol.stats.millis,
                    verified
                ),
            };
            Ok(CmdOutcome {
                stdout: out,
                code: exit_code::SUCCESS,
            })
        }
        Err(Error::Timeout { bounds }) => {
            let out = match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "graph": descriptor,
                        "status": "timeout",
                        "lower": bounds.lower,
                        "upper": bounds.upper,
                        "upper_witness": labels_json(&g, &bounds.upper_witness),
                    });
                    format!("{value}\n")
                }
                _ => format!(
                    "graph: {}\nstatus: timeout\nbounds: [{}, {}]\nupper witness: {}\n",
                    descriptor,
                    bounds.lower,
                    bounds.upper,
                    labels_text(&g, &bounds.upper_witness)
                ),
            };
            Ok(CmdOutcome {
                stdout: out,
                code: exit_code::TIMEOUT,
            })
        }
        Err(e) => Err(e),
    }
}

/// Checks a label set against the defining property; prints the first
/// uncovered pair on failure.
pub fn cmd_verify(input: &GraphInput, set: &[Label]) -> Result<CmdOutcome> {
    let g = input.build()?;
    let d = all_pairs_distances(&g);
    let s = g.vertex_set_of(set)?;
    let res = is_equalizer_set(&d, &s);
    if res.is_equalizer {
        Ok(CmdOutcome::ok("true\n".into()))
    } else {
        let p = res.uncovered_pair.expect("failure carries a pair");
        Ok(CmdOutcome {
            stdout: format!(
                "false\nuncovered pair: {{{}, {}}}\n",
                g.label(p.x),
                g.label(p.y)
            ),
            code: exit_code::VERIFICATION_FAILURE,
        })
    }
}

/// Builds the family witness set, lists it, and verifies it.
pub fn cmd_construct(family: ClosedFamily, params: &[u32]) -> Result<CmdOutcome> {
    let witness = constructions::construct_witness(family, params)?;
    let g = constructions::build_graph(family, params)?;
    let d = all_pairs_distances(&g);
    let set = g.vertex_set_of(&witness.vertices)?;
    let verified = is_equalizer_set(&d, &set).is_equalizer;
    let listing = witness
        .vertices
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let stdout = format!(
        "construction: {}\nwitness ({} vertices): {}\nverified: {}\n",
        witness.construction_tag,
        witness.vertices.len(),
        listing,
        verified
    );
    Ok(CmdOutcome {
        stdout,
        code: if verified {
            exit_code::SUCCESS
        } else {
            exit_code::VERIFICATION_FAILURE
        },
    })
}

/// Prints the bisector of two vertices in label coordinates.
pub fn cmd_bisector(input: &GraphInput, v: &Label, w: &Label) -> Result<CmdOutcome> {
    let g = input.build()?;
    let d = all_pairs_distances(&g);
    let vi = g.index_of(v)?;
    let wi = g.index_of(w)?;
    let b = bisector(&d, vi, wi)?;
    Ok(CmdOutcome::ok(format!("{}\n", labels_text(&g, &b))))
}

// ---------------------------------------------------------------------
// result cache

/// One solved instance, stored as a line of JSON.
#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct ResultRecord {
    pub key: String,
    pub xi: usize,
    pub basis: Vec<Vec<u32>>,
    pub strategy: String,
    pub nodes: u64,
    pub millis: u64,
    pub version: String,
}

impl ResultRecord {
    pub fn from_solution(key: String, g: &Graph, sol: &Solution) -> Self {
        ResultRecord {
            key,
            xi: sol.xi,
            basis: g.labels_of(&sol.basis).iter().map(|l| l.0.clone()).collect(),
            strategy: sol.strategy.as_str().to_string(),
            nodes: sol.stats.nodes,
            millis: sol.stats.millis,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Append-only JSON-lines cache keyed by graph descriptor.
pub struct ResultCache {
    path: Option<PathBuf>,
    records: HashMap<String, ResultRecord>,
}

impl ResultCache {
    /// In-memory cache with no backing file.
    pub fn ephemeral() -> Self {
        ResultCache {
            path: None,
            records: HashMap::new(),
        }
    }

    pub fn open(path: &Path) -> Result<Self> {
        let mut records = HashMap::new();
        if path.exists() {
            let content = std::fs::read_to_string(path)?;
            for (lineno, line) in content.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let record: ResultRecord = serde_json::from_str(line).map_err(|e| {
                    Error::Format(format!(
                        "cache line {} is not a result record: {e}",
                        lineno + 1
                    ))
                })?;
                records.insert(record.key.clone(), record);
            }
        }
        Ok(ResultCache {
            path: Some(path.to_path_buf()),
            records,
        })
    }

    /// Returns the stored record after re-verifying its basis against a
    /// freshly built graph. A basis that no longer verifies (or has the
    /// wrong cardinality) aborts with a corruption error instead of
    /// being served.
    pub fn lookup(&self, key: &str, g: &Graph) -> Result<Option<&ResultRecord>> {
        let Some(record) = self.records.get(key) else {
            return Ok(None);
        };
        let labels: Vec<Label> = record.basis.iter().map(|c| Label(c.clone())).collect();
        let set = g
            .vertex_set_of(&labels)
            .map_err(|e| Error::CacheCorrupt(format!("{key}: {e}")))?;
        if set.len() != record.xi {
            return Err(Error::CacheCorrupt(format!(
                "{key}: stored basis has {} vertices but xi = {}",
                set.len(),
                record.xi
            )));
        }
        let d = all_pairs_distances(g);
        if !is_equalizer_set(&d, &set).is_equalizer {
            return Err(Error::CacheCorrupt(format!(
                "{key}: stored basis is not a distance-equalizer set"
            )));
        }
        Ok(Some(record))
    }

    pub fn insert(&mut self, record: ResultRecord) -> Result<()> {
        if let Some(path) = &self.path {
            let mut file = std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)?;
            writeln!(file, "{}", serde_json::to_string(&record)?)?;
        }
        self.records.insert(record.key.clone(), record);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

// ---------------------------------------------------------------------
// grid q-table

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellStatus {
    Solved { xi: usize, q: i64 },
    TimedOut,
}

/// q(k,n) = xi(P_k x P_n) - ceil(k*n/2) for all 2 <= k <= k_max,
/// 2 <= n <= n_max.
#[derive(Clone, Debug)]
pub struct GridTable {
    pub k_max: u32,
    pub n_max: u32,
    cells: HashMap<(u32, u32), CellStatus>,
}

impl GridTable {
    pub fn cell(&self, k: u32, n: u32) -> CellStatus {
        self.cells[&(k, n)]
    }

    pub fn q(&self, k: u32, n: u32) -> Option<i64> {
        match self.cell(k, n) {
            CellStatus::Solved { q, .. } => Some(q),
            CellStatus::TimedOut => None,
        }
    }

    pub fn timed_out_cells(&self) -> usize {
        self.cells
            .values()
            .filter(|c| matches!(c, CellStatus::TimedOut))
            .count()
    }
}

fn half_ceil(k: u32, n: u32) -> i64 {
    ((k as i64) * (n as i64) + 1) / 2
}

/// Computes the table with the bipartite-seeded strategy, symmetric
/// cells solved once and mirrored, resuming from (and appending to) the
/// cache. Cells run in parallel; output order never depends on
/// completion order.
pub fn compute_table(
    k_max: u32,
    n_max: u32,
    budget_per_cell: Duration,
    cache: &mut ResultCache,
) -> Result<GridTable> {
    if k_max < 2 || n_max < 2 {
        return Err(Error::Parameter("table requires k_max, n_max >= 2".into()));
    }
    let mut unique: Vec<(u32, u32)> = Vec::new();
    for k in 2..=k_max {
        for n in 2..=n_max {
            unique.push((k.min(n), k.max(n)));
        }
    }
    unique.sort_unstable();
    unique.dedup();

    // resolve cache hits first so the parallel stage only solves misses
    let mut resolved: HashMap<(u32, u32), CellStatus> = HashMap::new();
    let mut missing: Vec<(u32, u32)> = Vec::new();
    for &(k, n) in &unique {
        let spec = FamilySpec::Grid(k, n);
        let g = spec.build()?;
        match cache.lookup(&spec.to_string(), &g)? {
            Some(record) => {
                resolved.insert(
                    (k, n),
                    CellStatus::Solved {
                        xi: record.xi,
                        q: record.xi as i64 - half_ceil(k, n),
                    },
                );
            }
            None => missing.push((k, n)),
        }
    }

    type FreshCell = ((u32, u32), Option<ResultRecord>);
    let fresh: Mutex<Vec<FreshCell>> = Mutex::new(Vec::new());
    missing.par_iter().try_for_each(|&(k, n)| -> Result<()> {
        let spec = FamilySpec::Grid(k, n);
        let g = spec.build()?;
        let d = all_pairs_distances(&g);
        let entry = match solve_exact(&g, &d, Strategy::BipartiteSeeded, budget_per_cell) {
            Ok(sol) => Some(ResultRecord::from_solution(spec.to_string(), &g, &sol)),
            Err(Error::Timeout { .. }) => None,
            Err(e) => return Err(e),
        };
        fresh.lock().unwrap().push(((k, n), entry));
        Ok(())
    })?;

    let mut fresh = fresh.into_inner().unwrap();
    fresh.sort_by_key(|(cell, _)| *cell);
    for ((k, n), entry) in fresh {
        match entry {
            Some(record) => {
                resolved.insert(
                    (k, n),
                    CellStatus::Solved {
                        xi: record.xi,
                        q: record.xi as i64 - half_ceil(k, n),
                    },
                );
                cache.insert(record)?;
            }
            None => {
                resolved.insert((k, n), CellStatus::TimedOut);
            }
        }
    }

    let mut cells = HashMap::new();
    for k in 2..=k_max {
        for n in 2..=n_max {
            let canonical = (k.min(n), k.max(n));
            cells.insert((k, n), resolved[&canonical]);
        }
    }
    Ok(GridTable {
        k_max,
        n_max,
        cells,
    })
}

/// CSV rendering: header row of n values, one row per k, `T` marking a
/// timed-out cell.
pub fn table_to_csv(table: &GridTable) -> String {
    let mut out = String::from("k\\n");
    for n in 2..=table.n_max {
        out.push_str(&format!(",{n}"));
    }
    out.push('\n');
    for k in 2..=table.k_max {
        out.push_str(&k.to_string());
        for n in 2..=table.n_max {
            match table.cell(k, n) {
                CellStatus::Solved { q, .. } => out.push_str(&format!(",{q}")),
                CellStatus::TimedOut => out.push_str(",T"),
            }
        }
        out.push('\n');
    }
    out
}

/// Parses the CSV back into q values (None marks a timeout cell).
pub fn table_from_csv(csv: &str) -> Result<HashMap<(u32, u32), Option<i64>>> {
    let mut lines = csv.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty table".into()))?;
    let ns: Vec<u32> = header
        .split(',')
        .skip(1)
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Format(format!("bad column header {t:?}")))
        })
        .collect::<Result<_>>()?;
    let mut cells = HashMap::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let k: u32 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format(format!("bad row header in {line:?}")))?;
        for (i, cell) in parts.enumerate() {
            let n = *ns
                .get(i)
                .ok_or_else(|| Error::Format("row longer than header".into()))?;
            let status = if cell == "T" {
                None
            } else {
                Some(
                    cell.parse::<i64>()
                        .map_err(|_| Error::Format(format!("bad cell {cell:?}")))?,
                )
            };
            cells.insert((k, n), status);
        }
    }
    Ok(cells)
}

pub fn table_to_json(table: &GridTable) -> String {
    let mut rows = Vec::new();
    for k in 2..=table.k_max {
        for n in 2..=table.n_max {
            let value = match table.cell(k, n) {
                CellStatus::Solved { xi, q } => serde_json::json!({
                    "k": k, "n": n, "xi": xi, "q": q, "status": "solved",
                }),
                CellStatus::TimedOut => serde_json::json!({
                    "k": k, "n": n, "status": "timeout",
                }),
            };
            rows.push(value);
        }
    }
    format!("{}\n", serde_json::json!({ "cells": rows }))
}

/// Runs the full table command.
pub fn cmd_table(
    k_max: u32,
    n_max: u32,
    budget_per_cell: Duration,
    cache_path: Option<&Path>,
    format: OutputFormat,
) -> Result<CmdOutcome> {
    let mut cache = match cache_path {
        Some(p) => ResultCache::open(p)?,
        None => ResultCache::ephemeral(),
    };
    let table = compute_table(k_max, n_max, budget_per_cell, &mut cache)?;
    let stdout = match format {
        OutputFormat::Json => table_to_json(&table),
        _ => table_to_csv(&table),
    };
    let code = if table.timed_out_cells() > 0 {
        exit_code::TIMEOUT
    } else {
        exit_code::SUCCESS
    };
    Ok(CmdOutcome { stdout, code })
}
