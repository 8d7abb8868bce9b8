//! Command-line front end.
//!
//! Subcommands: `list`, `verify --id <ID>`, `verify-all`, `eval --spec <FILE>`,
//! `explain --id <ID>`. Exit code 0 when no record failed, 1 on any failed
//! record, 2 on usage or I/O errors (including unknown ids).
//!
//! `--format json` output is canonical (sorted keys, canonical rational
//! strings): the same invocation with the same seed is byte-identical.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::series::{Mode, SeriesSpec};
use crate::verifier::{
    to_canonical_json, verify_all, verify_entry, VerificationReport, VerifyConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "hyperxf",
    about = "Exact-arithmetic verification of hypergeometric summation and transformation identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct VerifyOpts {
    /// RNG seed; reports are a pure function of (catalog, flags)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Admissible environments per entry
    #[arg(long)]
    samples: Option<u32>,
    /// Exact entries sweep n = 0..=nmax per sample
    #[arg(long)]
    nmax: Option<u32>,
    /// Truncation order for the power-series entries
    #[arg(long = "ps-order")]
    ps_order: Option<u32>,
    /// Term budget for the numeric-soft entries
    #[arg(long = "soft-terms")]
    soft_terms: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl VerifyOpts {
    fn config(&self) -> VerifyConfig {
        let mut config = VerifyConfig {
            seed: self.seed,
            ..VerifyConfig::default()
        };
        if let Some(s) = self.samples {
            config.samples = s;
        }
        if let Some(n) = self.nmax {
            config.n_max = n;
        }
        if let Some(p) = self.ps_order {
            config.ps_order = p;
        }
        if let Some(t) = self.soft_terms {
            config.soft_terms = t;
        }
        config
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the identity catalog
    List {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify one identity
    Verify {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Verify every identity plus the cross-check suite
    VerifyAll {
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Evaluate a series spec (JSON file) in its declared mode
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show an entry's constraints and derived-parameter chain
    Explain {
        #[arg(long)]
        id: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Run with explicit arguments; returns (exit code, stdout text, stderr text).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage; version/help requests exit 0
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                (EXIT_USAGE, String::new(), rendered)
            } else {
                (EXIT_OK, rendered, String::new())
            };
        }
    };
    match dispatch(cli) {
        Ok((code, out)) => (code, out, String::new()),
        Err(msg) => (EXIT_USAGE, String::new(), format!("error: {msg}\n")),
    }
}

fn dispatch(cli: Cli) -> Result<(i32, String), String> {
    match cli.command {
        Command::List { format } => Ok((EXIT_OK, render_list(format))),
        Command::Verify { id, opts } => {
            catalog::find(&id).map_err(|e| e.to_string())?;
            let config = opts.config();
            let report = verify_entry(&id, &config).map_err(|e| e.to_string())?;
            let failed = !report.passed();
            let text = render_reports(std::slice::from_ref(&report), opts.format, true);
            finish(text, &opts.out, failed)
        }
        Command::VerifyAll { opts } => {
            let config = opts.config();
            let reports = verify_all(&config).map_err(|e| e.to_string())?;
            let failed = reports.iter().any(|r| !r.passed());
            let text = render_reports(&reports, opts.format, false);
            finish(text, &opts.out, failed)
        }
        Command::Eval { spec, format, out } => {
            let raw =
                std::fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let spec: SeriesSpec = serde_json::from_str(&raw).map_err(|e| e.to_string())?;
            let text = eval_spec(&spec, format).map_err(|e| e.to_string())?;
            finish(text, &out, false)
        }
        Command::Explain { id, format } => {
            let entry = catalog::find(&id).map_err(|e| e.to_string())?;
            Ok((EXIT_OK, render_explain(entry, format)))
        }
    }
}

fn finish(text: String, out: &Option<PathBuf>, failed: bool) -> Result<(i32, String), String> {
    let code = if failed { EXIT_FAIL } else { EXIT_OK };
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok((code, String::new()))
        }
        None => Ok((code, text)),
    }
}

fn render_list(format: Format) -> String {
    let summaries = catalog::list_entries();
    match format {
        Format::Json => to_canonical_json(&summaries) + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<26} {:<18} {:<26} free parameters",
                "id", "mode", "source"
            );
            for s in &summaries {
                let _ = writeln!(
                    out,
                    "{:<26} {:<18} {:<26} {}",
                    s.id,
                    s.mode.to_string(),
                    s.source_eq,
                    s.free_params.join(",")
                );
            }
            out
        }
    }
}

fn render_reports(reports: &[VerificationReport], format: Format, single: bool) -> String {
    match format {
        Format::Json => {
            if single {
                to_canonical_json(&reports[0]) + "\n"
            } else {
                to_canonical_json(&reports) + "\n"
            }
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{:<36} {}  passes={} fails={} rejects={}",
                    r.entry, verdict, r.summary.passes, r.summary.fails, r.summary.rejects
                );
                if !r.passed() {
                    for rec in r
                        .records
                        .iter()
                        .filter(|r| r.status == crate::verifier::Status::Fail)
                    {
                        let _ = writeln!(
                            out,
                            "  sample {} n={:?} env={:?} residual={:?}",
                            rec.sample, rec.n, rec.env, rec.residual
                        );
                    }
                }
            }
            out
        }
    }
}

fn eval_spec(spec: &SeriesSpec, format: Format) -> crate::Result<String> {
    #[derive(serde::Serialize)]
    #[serde(untagged)]
    enum EvalOut {
        Value { value: String },
        Partial { value: String, last_term: String },
        Series { order: u32, coeffs: Vec<String> },
    }
    let out = match spec.mode {
        Mode::Terminating(_) => EvalOut::Value {
            value: spec.eval_terminating()?.to_string(),
        },
        Mode::Partial(m) => {
            let (value, last) = spec.eval_partial(m)?;
            EvalOut::Partial {
                value: value.to_string(),
                last_term: last.to_string(),
            }
        }
        Mode::Formal(n) => {
            let ps = spec.eval_formal(n)?;
            EvalOut::Series {
                order: n,
                coeffs: ps.coeffs().iter().map(|c| c.to_string()).collect(),
            }
        }
    };
    Ok(match format {
        Format::Json => to_canonical_json(&out) + "\n",
        Format::Text => match out {
            EvalOut::Value { value } => format!("{value}\n"),
            EvalOut::Partial { value, last_term } => {
                format!("{value} (last term {last_term})\n")
            }
            EvalOut::Series { coeffs, .. } => format!("[{}]\n", coeffs.join(", ")),
        },
    })
}

fn render_explain(entry: &catalog::IdentityEntry, format: Format) -> String {
    #[derive(serde::Serialize)]
    struct DerivedOut {
        name: String,
        formula: String,
        source_eq: String,
    }
    #[derive(serde::Serialize)]
    struct ExplainOut {
        id: String,
        source_eq: String,
        description: String,
        mode: catalog::CheckMode,
        free_params: Vec<String>,
        constraints: String,
        derived: Vec<DerivedOut>,
    }
    let out = ExplainOut {
        id: entry.id.to_string(),
        source_eq: entry.source_eq.to_string(),
        description: entry.description.to_string(),
        mode: entry.mode,
        free_params: entry.free_params.iter().map(|s| s.to_string()).collect(),
        constraints: entry.constraint_note.to_string(),
        derived: entry
            .derived
            .iter()
            .map(|d| DerivedOut {
                name: d.name.to_string(),
                formula: d.formula_src.to_string(),
                source_eq: d.eq_label.to_string(),
            })
            .collect(),
    };
    match format {
        Format::Json => to_canonical_json(&out) + "\n",
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}  [{}]", out.id, out.source_eq);
            let _ = writeln!(s, "{}", out.description);
            let _ = writeln!(s, "mode: {}", out.mode);
            let _ = writeln!(s, "free parameters: {}", out.free_params.join(", "));
            let _ = writeln!(s, "constraints: {}", out.constraints);
            if !out.derived.is_empty() {
                let _ = writeln!(s, "derived parameters, in evaluation order:");
                for d in &out.derived {
                    let _ = writeln!(s, "  {} = {}   {}", d.name, d.formula, d.source_eq);
                }
            }
            s
        }
    }
}

/// Binary entry point: applies `HYPERXF_THREADS`, runs, prints, returns the
/// exit code.
pub fn cli_main() -> i32 {
    if let Ok(threads) = std::env::var("HYPERXF_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    let (code, out, err) = run(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    code
}
