use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbitflag_core::flags::{ExhaustionSpec, Family, FiniteTypeDescriptor, FlagType};
use orbitflag_core::orbits::{degeneracy_order, enumerate_orbits_with, EnumerateOptions};
use orbitflag_core::report;
use orbitflag_core::stabilization::{check_injectivity, trace_counts, TraceOptions};
use orbitflag_core::structures::RealFormStructure;
use orbitflag_core::verify::{run_suite, Suite, VerifyConfig};
use orbitflag_core::Error;

#[derive(Parser)]
#[command(name = "orbitflag", version, about = "Real group orbits on complex flag varieties, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct Context {
    /// su:p,q | slr:n | slh:n
    #[arg(long)]
    form: String,
    /// Flag type as comma-separated member dimensions, e.g. 1,2. Empty for the point.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    flag: String,
    /// Ambient dimension; must agree with the form when given.
    #[arg(long)]
    dim: Option<usize>,
    /// Skip the stabilizer computation of orbit dimensions.
    #[arg(long)]
    no_dims: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate orbits with witnesses and open/closed flags.
    Classify {
        #[command(flatten)]
        ctx: Context,
        #[command(flatten)]
        out: Output,
    },
    /// Print only the number of orbits.
    Count {
        #[command(flatten)]
        ctx: Context,
        #[command(flatten)]
        out: Output,
    },
    /// Degeneracy order as a covering graph.
    Poset {
        #[command(flatten)]
        ctx: Context,
        #[command(flatten)]
        out: Output,
    },
    /// Trace orbit sets along an exhaustion.
    Stabilize {
        /// su_inf | su_p:<p> | slr | slh
        #[arg(long)]
        family: String,
        /// e.g. dims=1,3;codims=2 or middle=1/2 or chain
        #[arg(long)]
        descriptor: String,
        /// Level range A..B (inclusive).
        #[arg(long)]
        levels: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Run a property suite: invariance, counts, dimension-bound, injectivity, poset, or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => 3,
        Error::Validation(_) | Error::DegenerateSample(_) | Error::Embedding(_) => 1,
        _ => 2,
    }
}

fn parse_flag(ctx: &Context) -> Result<(RealFormStructure, FlagType), Error> {
    let form: RealFormStructure = ctx.form.parse()?;
    if let Some(d) = ctx.dim {
        form.check_ambient(d)?;
    }
    let dims = ctx
        .flag
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad flag dimension `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let ty = FlagType::new(form.n(), dims)?;
    Ok((form, ty))
}

fn parse_levels(s: &str) -> Result<(usize, usize), Error> {
    let (a, b) = s.split_once("..").ok_or_else(|| Error::Parse(format!("levels `{s}` should look like A..B")))?;
    let num = |t: &str| t.trim().trim_start_matches('=').parse::<usize>().map_err(|_| Error::Parse(format!("bad level `{t}`")));
    Ok((num(a)?, num(b)?))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn emit(out: &Output, text: String) -> Result<(), Error> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn options(ctx: &Context) -> EnumerateOptions {
    EnumerateOptions { dimensions: !ctx.no_dims, ..EnumerateOptions::default() }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Classify { ctx, out } => {
            let (form, ty) = parse_flag(&ctx)?;
            let set = enumerate_orbits_with(&ty, &form, &options(&ctx))?;
            let poset = degeneracy_order(&set)?;
            let text = match out.format.unwrap_or(Format::Json) {
                Format::Json => json_text(&report::orbit_report(&set, &poset)),
                Format::Text => report::orbit_table(&set),
                Format::Dot => report::poset_dot("orbits", &set, &poset),
            };
            emit(&out, text)?;
        }
        Command::Count { ctx, out } => {
            let (form, ty) = parse_flag(&ctx)?;
            let set = enumerate_orbits_with(&ty, &form, &EnumerateOptions { dimensions: false, ..EnumerateOptions::default() })?;
            let text = match out.format.unwrap_or(Format::Json) {
                Format::Text | Format::Dot => format!("{}\n", set.len()),
                Format::Json => json_text(&json!({
                    "schema": report::SCHEMA,
                    "report": "count",
                    "form": form.spec(),
                    "flag_type": ty,
                    "count": set.len(),
                    "open_count": set.open_count(),
                })),
            };
            emit(&out, text)?;
        }
        Command::Poset { ctx, out } => {
            let (form, ty) = parse_flag(&ctx)?;
            let set = enumerate_orbits_with(&ty, &form, &options(&ctx))?;
            let poset = degeneracy_order(&set)?;
            let text = match out.format.unwrap_or(Format::Dot) {
                Format::Dot => report::poset_dot("orbits", &set, &poset),
                Format::Json => json_text(&report::orbit_report(&set, &poset)),
                Format::Text => report::orbit_table(&set),
            };
            emit(&out, text)?;
        }
        Command::Stabilize { family, descriptor, levels, seed, out } => {
            let family: Family = family.parse()?;
            let d: FiniteTypeDescriptor = descriptor.parse()?;
            let (a, b) = parse_levels(&levels)?;
            let ex = ExhaustionSpec::in_range(family, a, b)?;
            let (trace, verdict) = trace_counts(&d, &ex, &TraceOptions::default())?;
            let cert = check_injectivity(&trace);
            let text = match out.format.unwrap_or(Format::Json) {
                Format::Json => {
                    let mut v = report::trace_report(&trace, &cert, &verdict);
                    v["seed"] = json!(seed);
                    json_text(&v)
                }
                Format::Text => report::trace_table(&trace, &cert, &verdict),
                Format::Dot => report::trace_dot(&trace),
            };
            emit(&out, text)?;
            if !cert.injective {
                return Ok(1);
            }
        }
        Command::Verify { suite, seed, trials, max_n, out } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let cfg = VerifyConfig { seed, trials, max_n, ..VerifyConfig::default() };
            let reports = suites.iter().map(|&s| run_suite(s, &cfg)).collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(|r| r.passed);
            let text = match out.format.unwrap_or(Format::Json) {
                Format::Text | Format::Dot => reports
                    .iter()
                    .map(|r| format!("{} {}: {} checks, {} failures\n", if r.passed { "PASS" } else { "FAIL" }, r.suite, r.checks, r.failure_count))
                    .collect(),
                Format::Json => json_text(&json!({
                    "schema": report::SCHEMA,
                    "report": "verify",
                    "seed": seed,
                    "trials": trials,
                    "passed": passed,
                    "suites": reports,
                })),
            };
            emit(&out, text)?;
            if !passed {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
