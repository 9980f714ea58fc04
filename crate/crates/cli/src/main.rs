//! Command-line front end.
//!
//! Exit codes: 0 all applicable checks passed; 1 usage or IO error;
//! 2 at least one inconclusive verdict under --strict; 3 internal solver
//! failure (a certified enclosure on the wrong side of a proven bound).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spectral_lab::io as graph_io;
use spectral_lab::spectral::{default_max_iter, lambda2, principal_pair, Lambda2Method};
use spectral_lab_cli::{
    expand_family_arg, run_campaign, run_edge_experiments, run_explorer, run_friedman_study,
    CampaignConfig, CliError, EdgeMode, ExplorerConfig, FriedmanConfig, GraphSource, ReportFormat,
};

#[derive(Parser)]
#[command(
    name = "spectral-lab",
    about = "Certified spectral gap bounds: verification campaigns, edge experiments, explorer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Certification tolerance for lambda1 enclosures.
    #[arg(long, default_value_t = 1e-11)]
    tol: f64,
    /// Exit with code 2 when any verdict is inconclusive.
    #[arg(long)]
    strict: bool,
    /// Worker threads; defaults to SPECTRAL_LAB_JOBS or 1.
    #[arg(long)]
    jobs: Option<usize>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, default_value = "csv")]
    format: ReportFormat,
}

impl CommonOpts {
    fn jobs(&self) -> usize {
        self.jobs
            .or_else(|| {
                std::env::var("SPECTRAL_LAB_JOBS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(1)
            .max(1)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the certified lambda1 enclosure, lambda2 and the eigenvector of
    /// one graph file.
    Spectrum {
        /// Graph file (line 1 `<n> <m>`, then `<u> <v>` per edge).
        input: PathBuf,
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the main gap bound over graph families and/or input files.
    Verify {
        /// Family spec, e.g. `section4(2..40)`; repeatable.
        #[arg(long = "family")]
        families: Vec<String>,
        /// Graph file; repeatable.
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Edge-deletion sandwich and edge-addition bounds over regular families.
    Edges {
        #[arg(long = "family")]
        families: Vec<String>,
        /// Run only the deletion sandwich.
        #[arg(long, conflicts_with = "additions_only")]
        deletions_only: bool,
        /// Run only the addition bounds.
        #[arg(long)]
        additions_only: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Second-eigenvalue study over random k-regular samples.
    Friedman {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0.2)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Local search for connected irregular graphs with small
    /// (Delta - lambda1) n D.
    Explore {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 1000)]
        iterations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the best graph found to this file.
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Write a family to a graph file.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Unsuitable inputs are usage errors; only a failed solve is a solver error.
fn spectral_error(e: spectral_lab::SpectralError) -> CliError {
    use spectral_lab::SpectralError::*;
    match e {
        NotConnected | TooSmall { .. } | RegularGraph => CliError::Usage(e.to_string()),
        NoConvergence { .. } | TooLarge { .. } => CliError::Solver(e.to_string()),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sources_from(families: &[String], inputs: &[PathBuf]) -> Result<Vec<GraphSource>, CliError> {
    let mut sources = Vec::new();
    for f in families {
        for spec in expand_family_arg(f)? {
            sources.push(GraphSource::Family(spec));
        }
    }
    for path in inputs {
        sources.push(GraphSource::File(path.clone()));
    }
    Ok(sources)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Spectrum { input, tol, out } => {
            let g = graph_io::read_graph_file(&input)?;
            let est =
                principal_pair(&g, tol, default_max_iter(g.n())).map_err(spectral_error)?;
            let l2 = lambda2(&g, tol).map_err(spectral_error)?;
            let method = match l2.method {
                Lambda2Method::Dense => "dense",
                Lambda2Method::DeflatedIteration => "deflated-iteration",
            };
            let mut text = format!(
                "n={} m={}\nlambda1_lo={}\nlambda1_hi={}\nresidual={}\niterations={}\nlambda2={} method={} uncertainty={}\n",
                g.n(),
                g.m(),
                est.lambda1_lo,
                est.lambda1_hi,
                est.residual_norm,
                est.iterations,
                l2.lambda2,
                method,
                l2.uncertainty
            );
            for (i, x) in est.eigvec.iter().enumerate() {
                text.push_str(&format!("x[{i}]={x:.11e}\n"));
            }
            emit(&text, out.as_ref())?;
            Ok(false)
        }
        Command::Verify {
            families,
            inputs,
            common,
        } => {
            let cfg = CampaignConfig {
                sources: sources_from(&families, &inputs)?,
                tol: common.tol,
                jobs: common.jobs(),
                edge_mode: EdgeMode::default(),
            };
            let outcome = run_campaign(&cfg)?;
            emit(
                &spectral_lab_cli::render(&outcome.rows, common.format),
                common.out.as_ref(),
            )?;
            Ok(common.strict && outcome.inconclusive > 0)
        }
        Command::Edges {
            families,
            deletions_only,
            additions_only,
            common,
        } => {
            let edge_mode = if deletions_only {
                EdgeMode::DeletionsOnly
            } else if additions_only {
                EdgeMode::AdditionsOnly
            } else {
                EdgeMode::Both
            };
            let cfg = CampaignConfig {
                sources: sources_from(&families, &[])?,
                tol: common.tol,
                jobs: common.jobs(),
                edge_mode,
            };
            let outcome = run_edge_experiments(&cfg)?;
            emit(
                &spectral_lab_cli::render(&outcome.rows, common.format),
                common.out.as_ref(),
            )?;
            Ok(common.strict && outcome.inconclusive > 0)
        }
        Command::Friedman {
            k,
            n,
            samples,
            epsilon,
            seed,
            common,
        } => {
            let summary = run_friedman_study(&FriedmanConfig {
                k,
                n,
                samples,
                epsilon,
                seed,
                tol: common.tol,
                jobs: common.jobs(),
            })?;
            let text = match common.format {
                ReportFormat::Csv => summary.to_csv(),
                ReportFormat::Json => summary.to_json(),
            };
            emit(&text, common.out.as_ref())?;
            eprintln!("{}", summary.summary_line());
            let inconclusive = summary
                .rows
                .iter()
                .any(|r| r.shift_verdict.contains("inconclusive"));
            Ok(common.strict && inconclusive)
        }
        Command::Explore {
            n,
            max_degree,
            iterations,
            seed,
            out_graph,
            common,
        } => {
            let outcome = run_explorer(&ExplorerConfig {
                n,
                max_degree,
                iterations,
                seed,
                tol: common.tol,
            })?;
            if let Some(path) = &out_graph {
                graph_io::write_graph_file(&outcome.best, path)?;
            }
            let text = format!("{}\n", outcome.summary_line());
            emit(&text, common.out.as_ref())?;
            Ok(false)
        }
        Command::Gen { family, out } => {
            let spec = family
                .parse::<spectral_lab::families::FamilySpec>()
                .map_err(CliError::from)?;
            let g = spec.build()?;
            graph_io::write_graph_file(&g, &out)?;
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code is 2; the contract here reserves 2 for
            // strict-mode inconclusive, so usage errors map to 1.
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e @ CliError::Usage(_)) | Err(e @ CliError::Io(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e @ CliError::Solver(_)) => {
            eprintln!("solver failure: {e}");
            ExitCode::from(3)
        }
    }
}
