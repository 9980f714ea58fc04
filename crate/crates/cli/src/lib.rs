//! Batch verification harness over `spectral-lab`: campaign runner, edge
//! experiments, the Friedman study and the gap-constant explorer, all
//! emitting deterministic CSV/JSON reports.

pub mod campaign;
pub mod explorer;
pub mod friedman;
pub mod report;

pub use campaign::{
    expand_family_arg, run_campaign, run_edge_experiments, CampaignConfig, CliError, EdgeMode,
    GraphSource, RunOutcome,
};
pub use explorer::{run_explorer, ExplorerConfig, ExplorerOutcome};
pub use friedman::{run_friedman_study, FriedmanConfig, FriedmanSummary};
pub use report::{render, ReportFormat, ReportRow, CSV_HEADER};
