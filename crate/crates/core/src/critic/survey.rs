use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::family::FamilyParams;

use super::suite::{family_lemma_suite, names, SuiteOptions, SuiteReport, SuiteStatus};

/// One finished grid cell.
#[derive(Debug, Clone)]
pub struct SurveyCell {
    pub params: FamilyParams,
    pub report: SuiteReport,
    pub elapsed: Duration,
}

/// `q in 1..=4, k in 3..=6` plus `q in 1..=3, k = 7`, in `(q, k)` order.
pub fn acceptance_grid() -> Vec<FamilyParams> {
    let mut cells: Vec<FamilyParams> = (1..=4)
        .flat_map(|q| (3..=6).map(move |k| (q, k)))
        .chain((1..=3).map(|q| (q, 7)))
        .map(|(q, k)| FamilyParams::new(q, k).expect("valid grid"))
        .collect();
    cells.sort();
    cells
}

/// The full rectangle `1..=qmax x 3..=kmax`.
pub fn rectangle_grid(qmax: usize, kmax: usize) -> Vec<FamilyParams> {
    (1..=qmax)
        .flat_map(|q| (3..=kmax).map(move |k| (q, k)))
        .filter_map(|(q, k)| FamilyParams::new(q, k).ok())
        .collect()
}

/// Runs the suite on every cell using a pool of `jobs` threads. The output
/// order follows `cells`, whatever the pool size.
pub fn run_survey(cells: &[FamilyParams], opts: SuiteOptions, jobs: usize) -> Vec<SurveyCell> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        cells
            .par_iter()
            .map(|&params| {
                let start = Instant::now();
                let report = family_lemma_suite(params, opts);
                SurveyCell {
                    params,
                    report,
                    elapsed: start.elapsed(),
                }
            })
            .collect()
    })
}

fn flag(report: &SuiteReport, name: &str) -> String {
    match report.verdict(name) {
        None => "-".into(),
        Some(v) => {
            let mut s = if v.pass { "yes" } else { "no" }.to_string();
            if !v.claimed {
                s.push('*');
            }
            s
        }
    }
}

const FREENESS_COLUMNS: [&str; 5] = [
    names::FREE_2K2,
    names::FREE_K3P1,
    names::FREE_C5,
    names::FREE_P5,
    names::FREE_P7,
];

/// Fixed-width table, one row per cell. The trailing `time_ms` column is
/// the only nondeterministic field. A `*` marks a check that is recorded
/// but not claimed for that cell.
pub fn render_table(cells: &[SurveyCell]) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{:>3} {:>3} {:>4} {:>6} {:>4} {:>8}",
        "q", "k", "n", "degree", "chi", "critical"
    );
    for c in FREENESS_COLUMNS {
        let _ = write!(out, " {c:>10}");
    }
    let _ = writeln!(out, " {:>14} {:>9}", "status", "time_ms");
    for cell in cells {
        let r = &cell.report;
        let degree = r
            .verdict(names::REGULAR_DEGREE)
            .and_then(|v| v.certificate["degree"].as_u64())
            .map_or("-".to_string(), |d| d.to_string());
        let chi = r
            .verdict(names::CHROMATIC_NUMBER)
            .and_then(|v| v.certificate["chi"].as_u64())
            .map_or("-".to_string(), |d| d.to_string());
        let status = match r.status {
            SuiteStatus::Pass => "pass",
            SuiteStatus::ClaimFailed => "claim_failed",
            SuiteStatus::BudgetExhausted => "budget",
        };
        let _ = write!(
            out,
            "{:>3} {:>3} {:>4} {:>6} {:>4} {:>8}",
            cell.params.q(),
            cell.params.k(),
            cell.params.n(),
            degree,
            chi,
            flag(r, names::VERTEX_CRITICAL)
        );
        for c in FREENESS_COLUMNS {
            let _ = write!(out, " {:>10}", flag(r, c));
        }
        let _ = writeln!(out, " {:>14} {:>9}", status, cell.elapsed.as_millis());
    }
    out
}
