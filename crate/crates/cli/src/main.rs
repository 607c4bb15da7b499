use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use floerbox::cfk::{CfkModel, ModelSpec};
use floerbox::csc::{check_csc, TauScope};
use floerbox::homology::SCHEMA;
use floerbox::invariants::{derive_invariants, InvariantReport};
use floerbox::pipeline::{init_thread_pool, satellite_hfk, sweep, Pattern};
use floerbox::selftest::run_selftest;
use serde_json::{json, Value};

const MAX_FRAMING: i64 = 10_000;
const SWEEP_CHUNK: i64 = 16;

#[derive(Parser)]
#[command(name = "floerbox", version, about = "Knot Floer homology of Mazur and (2,1)-cable satellites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ĤFK rank table (A, delta_rel, rank).
    Hfk(RunArgs),
    /// Print genus, fiberedness, thickness and top rank.
    Invariants(RunArgs),
    /// Print one invariants row per framing in a range.
    Sweep(RunArgs),
    /// Run the cosmetic surgery screen on a Mazur satellite.
    Csc(CscArgs),
    /// Run the built-in golden checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = Output::Tsv)]
        output: Output,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value = "mazur")]
    pattern: Pattern,
    /// Companion model JSON.
    #[arg(long)]
    model: PathBuf,
    /// Framing `n`, or an inclusive range `a..b`.
    #[arg(long, allow_hyphen_values = true)]
    n: Framing,
    #[arg(long, value_enum, default_value_t = Output::Tsv)]
    output: Output,
}

#[derive(Args)]
struct CscArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    n: Framing,
    /// τ of the satellite, if known.
    #[arg(long, allow_hyphen_values = true)]
    tau_satellite: Option<i64>,
    /// Which n = 0 exceptional families require τ(K) = -1.
    #[arg(long, value_enum, default_value_t = ScopeArg::Unscoped)]
    tau_scope: ScopeArg,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Unscoped,
    SecondFamily,
    BothFamilies,
}

impl From<ScopeArg> for TauScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Unscoped => TauScope::Unscoped,
            ScopeArg::SecondFamily => TauScope::SecondFamily,
            ScopeArg::BothFamilies => TauScope::BothFamilies,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Framing {
    lo: i64,
    hi: i64,
}

impl Framing {
    fn single(self) -> Result<i64, Failure> {
        if self.lo == self.hi {
            Ok(self.lo)
        } else {
            Err(Failure::usage("this command takes a single framing, not a range"))
        }
    }
}

impl FromStr for Framing {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad framing {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        if lo.abs() > MAX_FRAMING || hi.abs() > MAX_FRAMING {
            return Err(format!("framings are limited to |n| <= {MAX_FRAMING}"));
        }
        Ok(Framing { lo, hi })
    }
}

struct Failure {
    kind: &'static str,
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { kind: "usage", message: message.into(), code: 2 }
    }
    fn input(message: impl Into<String>) -> Self {
        Failure { kind: "input", message: message.into(), code: 1 }
    }
    fn compute(message: impl ToString) -> Self {
        Failure { kind: "computation", message: message.to_string(), code: 1 }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { kind: "io", message: e.to_string(), code: 1 }
    }
}

fn load_model(path: &PathBuf) -> Result<CfkModel, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let spec = ModelSpec::from_json(&text).map_err(|e| Failure::input(e.to_string()))?;
    spec.build().map_err(|e| Failure::input(e.to_string()))
}

fn invariants_row(pattern: Pattern, n: i64, r: &InvariantReport, output: Output) -> String {
    match output {
        Output::Tsv => format!("{n}\t{}\t{}\t{}\t{}\n", r.genus, r.fibered, r.thickness, r.top_rank),
        Output::Json => {
            let mut v = json!({ "schema": SCHEMA, "pattern": pattern, "n": n });
            v.as_object_mut().unwrap().extend(match serde_json::to_value(r).unwrap() {
                Value::Object(m) => m,
                _ => unreachable!(),
            });
            format!("{v}\n")
        }
    }
}

const INVARIANTS_HEADER: &str = "n\tgenus\tfibered\tthickness\ttop_rank\n";

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Failure> {
    match cli.command {
        Command::Hfk(args) => {
            let model = load_model(&args.model)?;
            let n = args.n.single()?;
            let table = satellite_hfk(&model, args.pattern, n).map_err(Failure::compute)?;
            match args.output {
                Output::Tsv => out.write_all(table.to_tsv().as_bytes())?,
                Output::Json => {
                    let mut v = table.to_json();
                    v["pattern"] = json!(args.pattern);
                    v["n"] = json!(n);
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Invariants(args) => {
            let model = load_model(&args.model)?;
            let n = args.n.single()?;
            let report = derive_invariants(&satellite_hfk(&model, args.pattern, n).map_err(Failure::compute)?);
            if args.output == Output::Tsv {
                out.write_all(INVARIANTS_HEADER.as_bytes())?;
            }
            out.write_all(invariants_row(args.pattern, n, &report, args.output).as_bytes())?;
        }
        Command::Sweep(args) => {
            let model = load_model(&args.model)?;
            if args.output == Output::Tsv {
                out.write_all(INVARIANTS_HEADER.as_bytes())?;
            }
            let mut start = args.n.lo;
            while start <= args.n.hi {
                let end = (start + SWEEP_CHUNK - 1).min(args.n.hi);
                let rows = sweep(start..=end, |n| {
                    satellite_hfk(&model, args.pattern, n).map(|t| invariants_row(args.pattern, n, &derive_invariants(&t), args.output))
                });
                for row in rows {
                    out.write_all(row.map_err(Failure::compute)?.as_bytes())?;
                }
                out.flush()?;
                start = end + 1;
            }
        }
        Command::Csc(args) => {
            let model = load_model(&args.model)?;
            let n = args.n.single()?;
            let verdict = check_csc(&model, n, args.tau_satellite, args.tau_scope.into()).map_err(Failure::compute)?;
            match args.output {
                Output::Json => {
                    let mut v = serde_json::to_value(&verdict).unwrap();
                    v["schema"] = json!(SCHEMA);
                    writeln!(out, "{v}")?;
                }
                Output::Tsv => {
                    let slopes: Vec<String> = verdict.candidate_slope_pairs.iter().map(|s| s.to_string()).collect();
                    let family = verdict.matched_exceptional_family.map_or("-".to_string(), |f| {
                        let name = serde_json::to_value(f.family).unwrap().as_str().unwrap().to_string();
                        f.b.map_or(name.clone(), |b| format!("{name}:{b}"))
                    });
                    let status = serde_json::to_value(verdict.status).unwrap();
                    let obstruction = serde_json::to_value(verdict.obstruction_used).unwrap();
                    writeln!(out, "status\tobstruction\tslopes\tfamily")?;
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{family}",
                        status.as_str().unwrap(),
                        obstruction.as_str().unwrap(),
                        if slopes.is_empty() { "-".into() } else { slopes.join(",") }
                    )?;
                }
            }
        }
        Command::Selftest { output } => {
            let results = run_selftest();
            match output {
                Output::Json => writeln!(out, "{}", json!({ "schema": SCHEMA, "checks": results }))?,
                Output::Tsv => {
                    for r in &results {
                        let mark = if r.passed { "PASS" } else { "FAIL" };
                        if r.detail.is_empty() {
                            writeln!(out, "{mark}\t{}", r.name)?;
                        } else {
                            writeln!(out, "{mark}\t{}\t{}", r.name, r.detail)?;
                        }
                    }
                }
            }
            return Ok(results.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

fn report(f: Failure) -> ExitCode {
    eprintln!("{}", json!({ "error": { "kind": f.kind, "message": f.message } }));
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(Failure::usage(e.render().to_string().trim_end())),
    };
    if let Ok(v) = std::env::var("FLOERBOX_THREADS") {
        match v.parse::<usize>() {
            Ok(t) if t > 0 => init_thread_pool(t),
            _ => return report(Failure::usage(format!("FLOERBOX_THREADS must be a positive integer, got {v:?}"))),
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => report(f),
    }
}
