//! Enumeration of small graphs, graph6 ingestion, theorem sweeps and report
//! rendering.

mod enumerate;
mod ingest;
mod report;
mod sweep;

pub use enumerate::{
    canonical_graphs, enumerate_graphs, labeled_count, labeled_graph, EnumerationMode,
    CANONICAL_CAP, LABELED_CAP,
};
pub use ingest::{ingest, ingest_all, Ingested};
pub use report::{report, report_one, Entry, Format};
pub use sweep::{
    cycle_alpha_psi, is_exceptional_cycle_length, separations, sweep, sweep_with_jobs, CycleRow,
    Separation, SweepReport, Theorem, Violation, CYCLE_CAP, MAX_VIOLATIONS,
};
