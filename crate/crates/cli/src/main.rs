use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pseudosym::fixtures::Fixtures;
use pseudosym::params::ParamArgs;
use pseudosym::pipeline::{self, BasisMode, HilbertSource, Report, VerifyOptions};
use pseudosym::sweep::{run_sweep, Interval, Scope, SweepConfig};
use pseudosym::Failure;
use pseudosym_core::toric::KMode;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "pseudosym", version, about = "Standard bases and Hilbert series of pseudo-symmetric monomial curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators, conditions, k and semigroup invariants.
    Gens {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Standard basis of the toric ideal.
    Basis {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
        #[command(flatten)]
        k: KArgs,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Run the engine (default).
        #[arg(long, conflicts_with_all = ["closed_form", "verify", "mode"])]
        engine: bool,
        /// Emit the closed-form basis.
        #[arg(long, conflicts_with_all = ["verify", "mode"])]
        closed_form: bool,
        /// Run both and compare.
        #[arg(long, conflicts_with = "mode")]
        verify: bool,
    },
    /// Hilbert numerator, second series and Hilbert function of the tangent cone.
    Hilbert {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
        #[command(flatten)]
        k: KArgs,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Bayer's recursion on the engine's tangent cone (default).
        #[arg(long, conflicts_with_all = ["closed_form", "both", "mode"])]
        bayer: bool,
        #[arg(long, conflicts_with_all = ["both", "mode"])]
        closed_form: bool,
        #[arg(long, conflicts_with = "mode")]
        both: bool,
        /// Report H(0..=L); defaults to deg Q + 5.
        #[arg(long)]
        max_level: Option<usize>,
    },
    /// Engine against closed forms, fixtures and the semigroup oracle.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
        #[command(flatten)]
        k: KArgs,
        /// Add the Cohen-Macaulay verdict.
        #[arg(long)]
        cm: bool,
        #[arg(long)]
        max_level: Option<usize>,
        /// Read fixtures from this directory instead of the built-in set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Add wall-clock time to the report.
        #[arg(long)]
        timing: bool,
    },
    /// Verify every tuple of a parameter box; one JSON line per tuple.
    Sweep(SweepArgs),
    /// Brute-force semigroup data: gaps, Frobenius number, order counts.
    Oracle {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Levels of the order count; defaults to 20.
        #[arg(long)]
        max_level: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// JSON output (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain-text output.
    #[arg(long)]
    text: bool,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KArgs {
    /// Read the k-inequality as strict.
    #[arg(long)]
    k_strict: bool,
}

impl KArgs {
    fn mode(&self) -> KMode {
        if self.k_strict {
            KMode::Strict
        } else {
            KMode::NonStrict
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Engine,
    Closed,
    Both,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Range `LO:HI` or single value.
    #[arg(long, default_value = "2:8")]
    alpha1: Interval,
    #[arg(long, default_value = "2:8")]
    alpha2: Interval,
    #[arg(long, default_value = "2:8")]
    alpha3: Interval,
    #[arg(long, default_value = "2")]
    alpha4: Interval,
    #[arg(long, default_value = "1:8")]
    alpha21: Interval,
    /// Visit every valid tuple, not only those the closed form covers.
    #[arg(long)]
    all_valid: bool,
    /// Keep only tuples with this (non-strict) k.
    #[arg(long)]
    k: Option<u32>,
    #[command(flatten)]
    k_mode: KArgs,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Emit lines in parameter order.
    #[arg(long)]
    sorted: bool,
    #[arg(long)]
    max_level: Option<usize>,
    /// Write JSON lines here; the summary then goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn open_sink(path: &Option<PathBuf>) -> Result<Box<dyn Write + Send>, Failure> {
    match path {
        Some(p) => File::create(p)
            .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write + Send>)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", p.display()))),
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `key: value` lines; string lists go one item per line.
fn render_text(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Array(items) if items.iter().all(Value::is_string) && !items.is_empty() => {
                    s.push_str(&format!("{k}:\n"));
                    for item in items {
                        s.push_str(&format!("  {}\n", text_value(item)));
                    }
                }
                _ => s.push_str(&format!("{k}: {}\n", text_value(val))),
            }
        }
    }
    s
}

/// Basis text format: the polynomials, then a one-line JSON summary.
fn render_basis_text(v: &Value) -> String {
    let list = v.get("engine").or_else(|| v.get("closed_form"));
    let mut s = String::new();
    for p in list.and_then(Value::as_array).into_iter().flatten() {
        s.push_str(&text_value(p));
        s.push('\n');
    }
    let mut summary = serde_json::Map::new();
    for key in ["count", "k", "match"] {
        if let Some(x) = v.get(key) {
            summary.insert(key.into(), x.clone());
        }
    }
    s.push_str(&Value::Object(summary).to_string());
    s.push('\n');
    s
}

fn emit(report: &Report, out: &OutputArgs, basis_layout: bool) -> Result<u8, Failure> {
    let body = if !out.text {
        let mut s = report.json.to_string();
        s.push('\n');
        s
    } else if basis_layout {
        render_basis_text(&report.json)
    } else {
        render_text(&report.json)
    };
    let mut sink = open_sink(&out.out)?;
    sink.write_all(body.as_bytes())
        .and_then(|_| sink.flush())
        .map_err(|e| Failure::Invalid(format!("writing output: {e}")))?;
    for f in &report.findings {
        eprintln!("mismatch: {f}");
    }
    Ok(report.exit_code())
}

fn basis_mode(mode: Option<Mode>, closed_form: bool, verify: bool) -> BasisMode {
    match (mode, closed_form, verify) {
        (Some(Mode::Closed), ..) | (None, true, _) => BasisMode::ClosedForm,
        (Some(Mode::Both), ..) | (None, _, true) => BasisMode::Both,
        _ => BasisMode::Engine,
    }
}

fn hilbert_source(mode: Option<Mode>, closed_form: bool, both: bool) -> HilbertSource {
    match basis_mode(mode, closed_form, both) {
        BasisMode::Engine => HilbertSource::Bayer,
        BasisMode::ClosedForm => HilbertSource::ClosedForm,
        BasisMode::Both => HilbertSource::Both,
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gens { params, out } => emit(&pipeline::gens(&params.params()?)?, &out, false),
        Command::Basis { params, out, k, mode, engine: _, closed_form, verify } => {
            let report = pipeline::basis(&params.params()?, basis_mode(mode, closed_form, verify), k.mode())?;
            emit(&report, &out, true)
        }
        Command::Hilbert { params, out, k, mode, bayer: _, closed_form, both, max_level } => {
            let source = hilbert_source(mode, closed_form, both);
            emit(&pipeline::hilbert(&params.params()?, source, k.mode(), max_level)?, &out, false)
        }
        Command::Verify { params, out, k, cm, max_level, fixtures, timing } => {
            let fixtures = fixtures.map_or_else(Fixtures::embedded, Fixtures::from_dir);
            let opts = VerifyOptions { k_mode: k.mode(), max_level, cm, timing };
            emit(&pipeline::verify(&params.params()?, &opts, &fixtures)?, &out, false)
        }
        Command::Oracle { params, out, max_level } => emit(&pipeline::oracle(&params.params()?, max_level)?, &out, false),
        Command::Sweep(args) => {
            let cfg = SweepConfig {
                alpha1: args.alpha1.0,
                alpha2: args.alpha2.0,
                alpha3: args.alpha3.0,
                alpha4: args.alpha4.0,
                alpha21: args.alpha21.0,
                scope: if args.all_valid { Scope::Valid } else { Scope::ClosedForm },
                k: args.k,
                jobs: args.jobs,
                sorted: args.sorted,
                verify: VerifyOptions { k_mode: args.k_mode.mode(), max_level: args.max_level, cm: true, timing: false },
            };
            let mut sink = open_sink(&args.out)?;
            let summary = run_sweep(&cfg, &Fixtures::embedded(), &mut *sink)?;
            drop(sink);
            let text = serde_json::to_string_pretty(&summary.to_json()).expect("JSON values serialize");
            if args.out.is_some() {
                println!("{text}");
            } else {
                eprintln!("{text}");
            }
            Ok(summary.exit_code)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { pseudosym::EXIT_INVALID } else { pseudosym::EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
