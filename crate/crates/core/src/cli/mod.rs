//! Command-line front end.
//!
//! Exit codes: 0 success (or the pair agrees), 1 the pair is distinguished or
//! a catalog check failed, 2 bad input, 3 inconsistent classification inputs.

pub mod catalog;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braid::{BraidWord, QuasipositivityCertificate};
use crate::error::{Error, Result};
use crate::invariants::{report_for_diagram, verdict, ComparisonVerdict, Conclusion, InvariantReport};
use crate::surgery::{build_diagram, export_diagram, ExportFormat};

use catalog::{CatalogEntry, EntryKind, EntryOutcome, Family};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISTINGUISHED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

pub const MAX_P_ENV: &str = "COVERFORGE_MAX_P";
const DEFAULT_MAX_P: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "coverforge", version, about = "Contact invariants of cyclic branched covers of transverse braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the surgery diagram of Σ_p and report its invariants.
    Analyze(AnalyzeArgs),
    /// Compare the invariants of two braids at the same cover degree.
    Compare(CompareArgs),
    /// Built-in examples.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Braid word, e.g. "s1 -s2 s1^3".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    #[arg(long)]
    strands: usize,
    /// Cover degree.
    #[arg(long)]
    p: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the surgery diagram: --export dot|json <path>
    #[arg(long, num_args = 2, value_names = ["FORMAT", "PATH"])]
    export: Option<Vec<String>>,
    /// JSON quasipositivity certificate.
    #[arg(long)]
    qp_cert: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[arg(long, allow_hyphen_values = true)]
    braid1: String,
    #[arg(long)]
    strands1: usize,
    #[arg(long, allow_hyphen_values = true)]
    braid2: String,
    #[arg(long)]
    strands2: usize,
    #[arg(long)]
    p: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// Print all entries with their sources.
    List,
    /// Run entries and check them against expected values.
    Run(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Cover degree: N or A..B (inclusive).
    #[arg(long, default_value = "2")]
    p: String,
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated integer parameters for --family.
    #[arg(long, allow_hyphen_values = true, requires = "family")]
    params: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InconsistentClassification(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(&a, out),
        Command::Compare(a) => cmd_compare(&a, out),
        Command::Catalog(CatalogCommand::List) => cmd_catalog_list(out),
        Command::Catalog(CatalogCommand::Run(a)) => cmd_catalog_run(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn max_p() -> Result<usize> {
    match std::env::var(MAX_P_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::BadParams(format!("{MAX_P_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_P),
    }
}

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidDegree(p));
    }
    let max = max_p()?;
    if p > max {
        return Err(Error::DegreeTooLarge { p, max });
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32> {
    check_p(a.p)?;
    let b = BraidWord::parse(&a.braid, a.strands)?;
    let cert = match &a.qp_cert {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            Some(serde_json::from_str::<QuasipositivityCertificate>(&text)?)
        }
        None => None,
    };
    let d = build_diagram(&b, a.p)?;
    if let Some(target) = &a.export {
        let format: ExportFormat = target[0].parse()?;
        std::fs::write(&target[1], export_diagram(&d, format)?)?;
    }
    let report = report_for_diagram(&b, &d, cert.as_ref())?;
    let text = match a.format {
        Format::Json => to_json(&report)?,
        Format::Text => report_text(&report),
    };
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn cmd_compare(a: &CompareArgs, out: &mut dyn Write) -> Result<i32> {
    check_p(a.p)?;
    let b1 = BraidWord::parse(&a.braid1, a.strands1)?;
    let b2 = BraidWord::parse(&a.braid2, a.strands2)?;
    let left = report_for_diagram(&b1, &build_diagram(&b1, a.p)?, None)?;
    let right = report_for_diagram(&b2, &build_diagram(&b2, a.p)?, None)?;
    let v = verdict(left, right);
    let text = match a.format {
        Format::Json => to_json(&v)?,
        Format::Text => verdict_text(&v),
    };
    writeln!(out, "{text}")?;
    Ok(match v.conclusion {
        Conclusion::InvariantsDistinguish => EXIT_DISTINGUISHED,
        _ => EXIT_OK,
    })
}

fn cmd_catalog_list(out: &mut dyn Write) -> Result<i32> {
    for family in Family::ALL {
        writeln!(out, "[{}] params: {}", family.name(), family.usage())?;
        for params in family.defaults() {
            for e in catalog::entries(family, &params, 2)? {
                writeln!(out, "  {}", entry_line(&e))?;
                writeln!(out, "    source: {}", e.provenance)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn entry_line(e: &CatalogEntry) -> String {
    match &e.kind {
        EntryKind::Single { word, .. } => format!("{}: B{} {}", e.name, word.strands(), word),
        EntryKind::Pair { left, right } => {
            format!("{}: B{} {}  vs  B{} {}", e.name, left.strands(), left, right.strands(), right)
        }
    }
}

fn cmd_catalog_run(a: &RunArgs, out: &mut dyn Write) -> Result<i32> {
    let ps = catalog::parse_p_range(&a.p)?;
    for &p in &ps {
        check_p(p)?;
    }
    let family = a.family.as_deref().map(Family::parse).transpose()?;
    let param_sets = match (&family, &a.params) {
        (Some(_), Some(text)) => vec![catalog::parse_params(text)?],
        (Some(f), None) => f.defaults(),
        (None, _) => Vec::new(),
    };
    let mut jobs = Vec::new();
    for &p in &ps {
        match family {
            Some(f) => {
                for params in &param_sets {
                    jobs.extend(catalog::entries(f, params, p)?.into_iter().map(|e| (e, p)));
                }
            }
            None => jobs.extend(catalog::default_entries(p).into_iter().map(|e| (e, p))),
        }
    }
    let outcomes: Vec<EntryOutcome> = catalog::run(&jobs).into_iter().collect::<Result<_>>()?;
    let all_pass = outcomes.iter().all(|o| o.pass);
    match a.format {
        Format::Json => writeln!(out, "{}", to_json(&outcomes)?)?,
        Format::Text => {
            for o in &outcomes {
                let status = if o.pass { "PASS" } else { "FAIL" };
                let summary: Vec<String> = o
                    .checks
                    .iter()
                    .map(|c| {
                        if c.pass {
                            format!("{}={}", c.what, c.actual)
                        } else {
                            format!("{}: expected {} got {}", c.what, c.expected, c.actual)
                        }
                    })
                    .collect();
                writeln!(out, "{status}  {:<40} p={}  {}", o.name, o.p, summary.join("; "))?;
            }
            let passed = outcomes.iter().filter(|o| o.pass).count();
            writeln!(out, "{passed}/{} passed", outcomes.len())?;
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_DISTINGUISHED })
}

fn report_text(r: &InvariantReport) -> String {
    let flags: Vec<&str> = r.flags.iter().map(|f| f.as_str()).collect();
    let mut lines = vec![
        format!("braid:       B{} {}", r.strands, r.braid),
        format!("cover:       p = {}", r.p),
        format!("sl:          {}", r.sl),
        format!("components:  {} ({} with contact +1)", r.components, r.plus_count),
        format!("H1:          {}", r.h1_string()),
        format!("signature:   {}", r.signature),
        format!("chi(X):      {}", r.euler_char_x),
        format!("d3:          {}", r.d3),
        format!("flags:       {}", flags.join(", ")),
    ];
    for t in &r.summand_tags {
        lines.push(format!("summand:     {}", serde_json::to_string(t).unwrap()));
    }
    for n in &r.notes {
        lines.push(format!("note:        {n}"));
    }
    lines.join("\n")
}

fn verdict_text(v: &ComparisonVerdict) -> String {
    let conclusion = serde_json::to_value(v.conclusion).unwrap();
    let mut lines = vec![
        format!("left:   B{} {}", v.left.strands, v.left.braid),
        format!("right:  B{} {}", v.right.strands, v.right.braid),
        format!("sl:     {} / {}  ({})", v.left.sl, v.right.sl, mark(v.sl_match)),
        format!("H1:     {} / {}  ({})", v.left.h1_string(), v.right.h1_string(), mark(v.smooth_match)),
        format!("d3:     {} / {}  ({})", v.left.d3, v.right.d3, mark(v.homotopy_match)),
        format!("verdict: {}", conclusion.as_str().unwrap()),
    ];
    for c in &v.caveats {
        lines.push(format!("caveat: {c}"));
    }
    lines.join("\n")
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "differ"
    }
}
