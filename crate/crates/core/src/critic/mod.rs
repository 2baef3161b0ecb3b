//! Vertex-criticality checks, the per-family suite, and grid surveys.

mod criticality;
mod suite;
mod survey;

pub use criticality::{criticality_report, CriticalityError, CriticalityReport, Deletion};
pub use suite::{
    family_lemma_suite, names, ParamsJson, SuiteOptions, SuiteReport, SuiteStatus, Verdict,
    REPORT_SCHEMA,
};
pub use survey::{acceptance_grid, rectangle_grid, render_table, run_survey, SurveyCell};
