//! Verification campaigns: one report row per graph, evaluated in parallel
//! with output ordered by input position.

use std::path::PathBuf;

use rayon::prelude::*;
use thiserror::Error;

use spectral_lab::bounds::{
    diameter_bound_dense, edge_deletion_report, nikiforov_report, verify_edge_addition,
    verify_main_theorem, BoundsError, Verdict,
};
use spectral_lab::families::{FamilyError, FamilySpec};
use spectral_lab::graph::Graph;
use spectral_lab::spectral::{default_max_iter, principal_pair, SpectralError};
use spectral_lab::io as graph_io;

use crate::report::ReportRow;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Solver(String),
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::BoundViolated(_) => CliError::Solver(e.to_string()),
            BoundsError::Spectral(SpectralError::NoConvergence { .. }) => {
                CliError::Solver(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub enum GraphSource {
    Family(FamilySpec),
    File(PathBuf),
}

impl GraphSource {
    fn resolve(&self) -> Result<(String, Graph), CliError> {
        match self {
            GraphSource::Family(spec) => Ok((spec.to_string(), spec.build()?)),
            GraphSource::File(path) => {
                let g = graph_io::read_graph_file(path)?;
                Ok((path.display().to_string(), g))
            }
        }
    }
}

/// Which experiments the `edges` runner performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeMode {
    #[default]
    Both,
    DeletionsOnly,
    AdditionsOnly,
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub sources: Vec<GraphSource>,
    pub tol: f64,
    pub jobs: usize,
    /// Only consulted by `run_edge_experiments`.
    pub edge_mode: EdgeMode,
}

#[derive(Debug)]
pub struct RunOutcome {
    pub rows: Vec<ReportRow>,
    pub inconclusive: usize,
}

impl RunOutcome {
    fn collect(rows: Vec<ReportRow>) -> RunOutcome {
        let inconclusive = rows
            .iter()
            .filter(|r| {
                r.verdict_main.contains("inconclusive") || r.verdict_extra.contains("inconclusive")
            })
            .count();
        RunOutcome { rows, inconclusive }
    }
}

fn with_pool<T: Send>(
    jobs: usize,
    work: impl FnOnce() -> Result<Vec<T>, CliError> + Send,
) -> Result<Vec<T>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
    pool.install(work)
}

/// Three-valued verdict of `lo > bound` on a certified interval, as a token.
fn strict_above_token(lo: f64, hi: f64, bound: f64) -> Result<&'static str, CliError> {
    if lo > bound {
        Ok("pass")
    } else if hi <= bound {
        Err(CliError::Solver(format!(
            "interval [{lo}, {hi}] entirely below proven bound {bound}"
        )))
    } else {
        Ok("inconclusive")
    }
}

/// One report row for the main gap bound on a single graph. Regular and
/// disconnected inputs are flagged inapplicable rather than failed.
fn main_theorem_row(label: String, g: &Graph, tol: f64) -> Result<ReportRow, CliError> {
    let summary = g.distance_summary();
    let profile = g.degree_profile();

    if !summary.connected {
        return Ok(ReportRow {
            family: label,
            n: g.n(),
            m: g.m(),
            delta: profile.max_degree,
            diameter: None,
            lambda1_lo: None,
            lambda1_hi: None,
            gap_lo: None,
            gap_hi: None,
            bound_main: None,
            bound_cgn: None,
            c_lo: None,
            c_hi: None,
            verdict_main: "inapplicable:disconnected".into(),
            verdict_extra: String::new(),
        });
    }

    if profile.is_regular {
        // lambda1 = Delta holds exactly; certify anyway so the row carries a
        // real enclosure.
        let est = principal_pair(g, tol, default_max_iter(g.n())).map_err(to_solver)?;
        return Ok(ReportRow {
            family: label,
            n: g.n(),
            m: g.m(),
            delta: profile.max_degree,
            diameter: summary.diameter,
            lambda1_lo: Some(est.lambda1_lo),
            lambda1_hi: Some(est.lambda1_hi),
            gap_lo: None,
            gap_hi: None,
            bound_main: None,
            bound_cgn: None,
            c_lo: None,
            c_hi: None,
            verdict_main: "inapplicable:regular".into(),
            verdict_extra: String::new(),
        });
    }

    let report = verify_main_theorem(g, tol)?;
    let cgn = strict_above_token(report.gap_lo, report.gap_hi, report.bound_cgn)?;
    Ok(ReportRow {
        family: label,
        n: report.n,
        m: report.m,
        delta: report.max_degree,
        diameter: Some(report.diameter),
        lambda1_lo: Some(report.lambda1_lo),
        lambda1_hi: Some(report.lambda1_hi),
        gap_lo: Some(report.gap_lo),
        gap_hi: Some(report.gap_hi),
        bound_main: Some(report.bound_main),
        bound_cgn: Some(report.bound_cgn),
        c_lo: Some(report.c_lo),
        c_hi: Some(report.c_hi),
        verdict_main: report.verdict.to_string(),
        verdict_extra: format!("cgn={cgn}"),
    })
}

fn to_solver(e: SpectralError) -> CliError {
    CliError::Solver(e.to_string())
}

/// The `verify` campaign: the main gap bound over every input graph.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<RunOutcome, CliError> {
    if cfg.sources.is_empty() {
        return Err(CliError::Usage("no graph sources given".into()));
    }
    let rows = with_pool(cfg.jobs, || {
        cfg.sources
            .par_iter()
            .map(|source| {
                let (label, g) = source.resolve()?;
                main_theorem_row(label, &g, cfg.tol)
            })
            .collect()
    })?;
    Ok(RunOutcome::collect(rows))
}

fn verdict_token(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Inconclusive => "inconclusive",
    }
}

/// The `edges` experiments: for each regular input graph, the deletion
/// sandwich on every connectivity-preserving edge and the addition bounds on
/// every non-edge.
pub fn run_edge_experiments(cfg: &CampaignConfig) -> Result<RunOutcome, CliError> {
    if cfg.sources.is_empty() {
        return Err(CliError::Usage("no graph sources given".into()));
    }
    let units: Vec<(String, Graph)> = cfg
        .sources
        .iter()
        .map(|s| s.resolve())
        .collect::<Result<_, _>>()?;
    for (label, g) in &units {
        if !g.degree_profile().is_regular {
            return Err(CliError::Usage(format!(
                "edge experiments need regular graphs; {label} is irregular"
            )));
        }
        if !g.is_connected() {
            return Err(CliError::Usage(format!("{label} is not connected")));
        }
    }

    // One work item per edge (deletion) and per non-edge (addition).
    enum Work<'a> {
        Delete(&'a str, &'a Graph, usize, usize),
        Add(&'a str, &'a Graph, usize, usize),
    }
    let mut work = Vec::new();
    for (label, g) in &units {
        if cfg.edge_mode != EdgeMode::AdditionsOnly {
            for (u, v) in g.edges() {
                work.push(Work::Delete(label, g, u, v));
            }
        }
        if cfg.edge_mode != EdgeMode::DeletionsOnly {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if !g.has_edge(u, v) {
                        work.push(Work::Add(label, g, u, v));
                    }
                }
            }
        }
    }

    let rows = with_pool(cfg.jobs, || {
        work.par_iter()
            .map(|item| match *item {
                Work::Delete(label, g, u, v) => deletion_row(label, g, u, v, cfg.tol),
                Work::Add(label, g, u, v) => addition_row(label, g, u, v, cfg.tol),
            })
            .collect()
    })?;
    Ok(RunOutcome::collect(rows))
}

fn deletion_row(label: &str, g: &Graph, u: usize, v: usize, tol: f64) -> Result<ReportRow, CliError> {
    let family = format!("{label}-e({u},{v})");
    let report = match edge_deletion_report(g, u, v, tol) {
        Ok(r) => r,
        Err(BoundsError::DisconnectedAfterDeletion { .. }) => {
            let profile = g.degree_profile();
            return Ok(ReportRow {
                family,
                n: g.n(),
                m: g.m() - 1,
                delta: profile.max_degree,
                diameter: None,
                lambda1_lo: None,
                lambda1_hi: None,
                gap_lo: None,
                gap_hi: None,
                bound_main: None,
                bound_cgn: None,
                c_lo: None,
                c_hi: None,
                verdict_main: "inapplicable:disconnects".into(),
                verdict_extra: String::new(),
            });
        }
        Err(e) => return Err(e.into()),
    };

    let mut extra = format!(
        "upper={}",
        verdict_token(report.verdict_upper.expect("deletion sets upper verdict"))
    );
    // In the dense regime the diameter after one deletion stays below
    // 3(n+2)/Delta; the check is exact integer-vs-float arithmetic.
    if 2 * report.max_degree >= report.n {
        let bound = diameter_bound_dense(report.n, report.max_degree);
        if (report.diameter as f64) < bound {
            extra.push_str(";dense_diam=pass");
        } else {
            return Err(CliError::Solver(format!(
                "{family}: diameter {} reached dense bound {bound}",
                report.diameter
            )));
        }
    }

    Ok(ReportRow {
        family,
        n: report.n,
        m: report.m,
        delta: report.max_degree,
        diameter: Some(report.diameter),
        lambda1_lo: Some(report.lambda1_lo),
        lambda1_hi: Some(report.lambda1_hi),
        gap_lo: Some(report.gap_lo),
        gap_hi: Some(report.gap_hi),
        bound_main: Some(report.bound_main),
        bound_cgn: Some(report.bound_cgn),
        c_lo: Some(report.c_lo),
        c_hi: Some(report.c_hi),
        verdict_main: report.verdict.to_string(),
        verdict_extra: extra,
    })
}

fn addition_row(label: &str, h: &Graph, u: usize, v: usize, tol: f64) -> Result<ReportRow, CliError> {
    let family = format!("{label}+e({u},{v})");
    let add = verify_edge_addition(h, u, v, tol)?;
    let added = h.add_edge(u, v).expect("non-edge was checked");

    // The added graph is connected and irregular, so the main gap bound
    // applies to it as well and fills the numeric columns.
    let mut row = main_theorem_row(family, &added, tol)?;

    let upper_token = match add.upper {
        Some(_) => verdict_token(add.verdict),
        None => "na",
    };
    let nik = nikiforov_report(&added, tol)?;
    let nik_token = match nik.verdict {
        Some(v) => verdict_token(v).to_string(),
        None => "skip".to_string(),
    };
    row.verdict_extra = format!(
        "{};add={};upper={};nik={}",
        row.verdict_extra,
        verdict_token(add.verdict),
        upper_token,
        nik_token
    );
    Ok(row)
}

/// Expands one `--family` argument into specs. Each integer parameter may be
/// a single value or an inclusive range `a..b`; multiple ranges expand as a
/// cartesian product in row-major order. Nested `regular_minus_edge` specs
/// do not take ranges.
pub fn expand_family_arg(arg: &str) -> Result<Vec<FamilySpec>, CliError> {
    if !arg.contains("..") || arg.starts_with("regular_minus_edge") {
        return Ok(vec![arg.parse::<FamilySpec>()?]);
    }
    let open = arg
        .find('(')
        .ok_or_else(|| CliError::Usage(format!("bad family spec {arg:?}")))?;
    let close = arg
        .rfind(')')
        .ok_or_else(|| CliError::Usage(format!("bad family spec {arg:?}")))?;
    let name = &arg[..open];
    let suffix = &arg[close + 1..]; // possible :seed, kept verbatim
    let inner = &arg[open + 1..close];

    let mut choices: Vec<Vec<u64>> = Vec::new();
    for token in inner.split(',') {
        if let Some((a, b)) = token.split_once("..") {
            let a: u64 = a
                .parse()
                .map_err(|_| CliError::Usage(format!("bad range start {a:?} in {arg:?}")))?;
            let b: u64 = b
                .parse()
                .map_err(|_| CliError::Usage(format!("bad range end {b:?} in {arg:?}")))?;
            if a > b {
                return Err(CliError::Usage(format!("empty range {token:?} in {arg:?}")));
            }
            choices.push((a..=b).collect());
        } else {
            let x: u64 = token
                .parse()
                .map_err(|_| CliError::Usage(format!("bad parameter {token:?} in {arg:?}")))?;
            choices.push(vec![x]);
        }
    }

    let mut combos: Vec<Vec<u64>> = vec![Vec::new()];
    for choice in &choices {
        let mut next = Vec::with_capacity(combos.len() * choice.len());
        for combo in &combos {
            for &value in choice {
                let mut c = combo.clone();
                c.push(value);
                next.push(c);
            }
        }
        combos = next;
    }

    combos
        .into_iter()
        .map(|combo| {
            let params: Vec<String> = combo.iter().map(u64::to_string).collect();
            let text = format!("{name}({}){suffix}", params.join(","));
            text.parse::<FamilySpec>().map_err(CliError::from)
        })
        .collect()
}
