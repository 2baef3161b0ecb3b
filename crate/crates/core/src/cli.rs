//! The `critfam` command line.
//!
//! Exit status: 0 when every claimed check holds, 1 when a claimed check
//! fails, 2 when a solver budget runs out, 64 for usage errors, 65 for
//! unreadable input data and 74 for I/O failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chroma::{chromatic_number, Budget, DEFAULT_NODE_BUDGET};
use crate::critic::{
    acceptance_grid, criticality_report, family_lemma_suite, rectangle_grid, render_table,
    run_survey, SuiteOptions, SuiteReport, SuiteStatus,
};
use crate::family::{build_family, FamilyParams};
use crate::formats::{
    encode_graph6, read_graph, sniff_format, write_coloring_lines, write_dimacs, write_edge_list,
    GraphFormat,
};
use crate::graph::Graph;
use crate::pattern::{freeness_report, Pattern};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "critfam",
    version,
    about = "Build and verify the vertex-critical family G(q,k)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write G(q,k) as graph6, DIMACS or an edge list.
    Gen(GenArgs),
    /// Exact chromatic number of a graph file, with a colouring certificate.
    Chi(ChiArgs),
    /// Induced-pattern freeness of a graph file.
    Free(FreeArgs),
    /// Vertex-criticality of a graph file.
    Critical(ChiArgs),
    /// Run every check on G(q,k).
    VerifyFamily(VerifyArgs),
    /// Run verify-family over a grid of (q,k).
    Survey(SurveyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    G6,
    Dimacs,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InFormat {
    Auto,
    G6,
    Dimacs,
    Edges,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::G6)]
    pub format: OutFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (graph6, DIMACS .col, or `n m` edge list).
    pub file: PathBuf,
    #[arg(long = "input-format", value_enum, default_value_t = InFormat::Auto)]
    pub input_format: InFormat,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search-node limit per colourability call.
    #[arg(long, env = "CRITFAM_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FreeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated pattern names, e.g. `2K2,K3+P1,C5,P5`.
    #[arg(long, default_value = "2K2,K3+P1,C5,P5")]
    pub patterns: String,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Skip the χ and criticality checks.
    #[arg(long)]
    pub skip_critical: bool,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    /// Largest q; with --kmax selects the grid 1..=qmax x 3..=kmax.
    #[arg(long, requires = "kmax")]
    pub qmax: Option<usize>,
    /// Largest k; defaults to the built-in acceptance grid when omitted.
    #[arg(long, requires = "qmax")]
    pub kmax: Option<usize>,
    /// Worker threads. Output does not depend on this.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write the table here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write all suite reports as a JSON array.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Skip the χ and criticality checks.
    #[arg(long)]
    pub skip_critical: bool,
}

/// A failure with its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DATA,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {e}", path.display()),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a, stdout),
        Command::Chi(a) => chi(a, stdout),
        Command::Free(a) => free(a, stdout),
        Command::Critical(a) => critical(a, stdout),
        Command::VerifyFamily(a) => verify_family(a, stdout, stderr),
        Command::Survey(a) => survey(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn params(q: usize, k: usize) -> Result<FamilyParams, Failure> {
    FamilyParams::new(q, k).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(path, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn load_graph(input: &InputArgs) -> Result<Graph, Failure> {
    let text = fs::read_to_string(&input.file).map_err(|e| Failure::io(&input.file, e))?;
    let format = match input.input_format {
        InFormat::Auto => sniff_format(&text),
        InFormat::G6 => GraphFormat::Graph6,
        InFormat::Dimacs => GraphFormat::Dimacs,
        InFormat::Edges => GraphFormat::EdgeList,
    };
    read_graph(&text, format).map_err(|e| Failure::data(format!("{}: {e}", input.file.display())))
}

fn gen(a: GenArgs, stdout: &mut dyn Write) -> CmdResult {
    let p = params(a.q, a.k)?;
    let g = build_family(p);
    let text = match a.format {
        OutFormat::G6 => {
            let mut s = encode_graph6(&g).map_err(|e| Failure::usage(e.to_string()))?;
            s.push('\n');
            s
        }
        OutFormat::Dimacs => write_dimacs(&g),
        OutFormat::Edges => write_edge_list(&g),
    };
    emit(a.out.as_deref(), &text, stdout)?;
    Ok(EXIT_OK)
}

fn chi(a: ChiArgs, stdout: &mut dyn Write) -> CmdResult {
    let g = load_graph(&a.input)?;
    let r = match chromatic_number(&g, Budget::nodes(a.budget.budget)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stdout, "# {e}");
            return Ok(EXIT_BUDGET);
        }
    };
    let mut text = format!("# chi {}\n", r.chi);
    text.push_str(&write_coloring_lines(r.coloring.colors()));
    emit(None, &text, stdout)?;
    if let Some(path) = &a.json {
        write_json(
            path,
            &json!({ "schema": 1, "chi": r.chi, "clique": r.clique, "coloring": r.coloring.colors(), "nodes": r.stats.nodes }),
        )?;
    }
    Ok(EXIT_OK)
}

fn free(a: FreeArgs, stdout: &mut dyn Write) -> CmdResult {
    let g = load_graph(&a.input)?;
    let patterns = a
        .patterns
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Pattern>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let report = freeness_report(&g, &patterns);
    let mut text = String::new();
    for v in &report {
        match &v.witness {
            None => text.push_str(&format!("{} free\n", v.pattern)),
            Some(w) => {
                let list: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("{} not-free {}\n", v.pattern, list.join(" ")));
            }
        }
    }
    emit(None, &text, stdout)?;
    if let Some(path) = &a.json {
        write_json(path, &json!({ "schema": 1, "verdicts": report }))?;
    }
    Ok(EXIT_OK)
}

fn critical(a: ChiArgs, stdout: &mut dyn Write) -> CmdResult {
    let g = load_graph(&a.input)?;
    let r = match criticality_report(&g, Budget::nodes(a.budget.budget)) {
        Ok(r) => r,
        Err(crate::critic::CriticalityError::Empty) => {
            return Err(Failure::data("graph has no vertices"))
        }
        Err(e) => {
            let _ = writeln!(stdout, "# {e}");
            return Ok(EXIT_BUDGET);
        }
    };
    let mut text = format!(
        "chi {}\ncritical {}\n",
        r.chi,
        if r.critical { "yes" } else { "no" }
    );
    for d in &r.per_vertex {
        text.push_str(&format!("{} {}\n", d.vertex, d.chi));
    }
    emit(None, &text, stdout)?;
    if let Some(path) = &a.json {
        write_json(path, &json!({ "schema": 1, "report": r }))?;
    }
    Ok(EXIT_OK)
}

fn suite_exit(r: &SuiteReport) -> i32 {
    match r.status {
        SuiteStatus::Pass => EXIT_OK,
        SuiteStatus::ClaimFailed => EXIT_CLAIM_FAILED,
        SuiteStatus::BudgetExhausted => EXIT_BUDGET,
    }
}

fn verify_family(a: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let p = params(a.q, a.k)?;
    let opts = SuiteOptions {
        budget: Budget::nodes(a.budget.budget),
        check_criticality: !a.skip_critical,
    };
    let r = family_lemma_suite(p, opts);
    let mut text = String::new();
    for v in &r.verdicts {
        let mark = if v.pass { "PASS" } else { "FAIL" };
        let claim = if v.claimed { "claimed" } else { "recorded" };
        let mut extra = String::new();
        if let Some(t) = v.certificate.get("target").and_then(|t| t.as_str()) {
            extra = format!(" ({t})");
        }
        if let Some(c) = v.certificate.get("chi").and_then(|t| t.as_u64()) {
            extra = format!(" (chi={c})");
        }
        text.push_str(&format!("[{mark}] {:<22} {claim}{extra}\n", v.name));
    }
    let status = match r.status {
        SuiteStatus::Pass => "pass",
        SuiteStatus::ClaimFailed => "claim failed",
        SuiteStatus::BudgetExhausted => "budget exhausted",
    };
    text.push_str(&format!("{p}: {status}\n"));
    emit(None, &text, stdout)?;
    if let Some(msg) = &r.error {
        let _ = writeln!(stderr, "{p}: {msg}");
    }
    if let Some(path) = &a.json {
        write_json(path, &r)?;
    }
    Ok(suite_exit(&r))
}

fn survey(a: SurveyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let cells = match (a.qmax, a.kmax) {
        (Some(qmax), Some(kmax)) => {
            if qmax < 1 {
                return Err(Failure::usage("qmax must be ≥ 1"));
            }
            if kmax < 3 {
                return Err(Failure::usage("kmax must be ≥ 3"));
            }
            rectangle_grid(qmax, kmax)
        }
        _ => acceptance_grid(),
    };
    if a.jobs == 0 {
        return Err(Failure::usage("jobs must be ≥ 1"));
    }
    let opts = SuiteOptions {
        budget: Budget::nodes(a.budget.budget),
        check_criticality: !a.skip_critical,
    };
    let results = run_survey(&cells, opts, a.jobs);
    emit(a.out.as_deref(), &render_table(&results), stdout)?;
    if let Some(path) = &a.json {
        let reports: Vec<&SuiteReport> = results.iter().map(|c| &c.report).collect();
        write_json(path, &reports)?;
    }
    let mut code = EXIT_OK;
    for cell in &results {
        let r = &cell.report;
        match r.status {
            SuiteStatus::Pass => {}
            SuiteStatus::ClaimFailed => {
                let _ = writeln!(
                    stderr,
                    "cell {} failed: {}",
                    cell.params,
                    r.stopped_at.as_deref().unwrap_or("?")
                );
                code = EXIT_CLAIM_FAILED;
            }
            SuiteStatus::BudgetExhausted => {
                let _ = writeln!(
                    stderr,
                    "cell {} exhausted its budget: {}",
                    cell.params,
                    r.error.as_deref().unwrap_or("")
                );
                if code == EXIT_OK {
                    code = EXIT_BUDGET;
                }
            }
        }
    }
    Ok(code)
}
