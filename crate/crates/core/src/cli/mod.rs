//! Command line front end.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 guard exceeded,
//! 3 precondition failure (input not a Sagbi basis, non-global order).

pub mod job;
pub mod parse;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::initial::initial_set;
use crate::membership::subduct_with_limit;
use crate::order::TermOrder;
use crate::poly::{format_rational, Polynomial};
use crate::sagbi::{interreduce, is_sagbi, sagbi_construct};
use crate::walk::{walk, WalkOptions, WalkReport, WalkStatus, WalkStep};

use job::{Job, OrderSpec};

#[derive(Parser, Debug)]
#[command(name = "sagbi-walk", version, about = "Convert Sagbi bases between term orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Job document; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Result file; standard output when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Include the per-pass trace of `convert`.
    #[arg(long, global = true)]
    trace: bool,
    /// Skip checking that the generators form a Sagbi basis.
    #[arg(long, global = true)]
    no_validate: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Walk the generators from `start_order` to `target_order`.
    Convert,
    /// Reduced Sagbi basis under a single order.
    Sagbi,
    /// Is the generator list a Sagbi basis?
    Check,
    /// Initial forms with respect to `weight`.
    Initial,
    /// Subduction of `polynomial` by the generators.
    Normalform,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

/// Entry point used by the binary.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with_io<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.body, stdout) {
                let _ = writeln!(stderr, "{}", diagnostic(&e));
                return 1;
            }
            if let Some(e) = &outcome.error {
                let _ = writeln!(stderr, "{}", diagnostic(e));
            }
            outcome.error.as_ref().map_or(0, Error::exit_code)
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", diagnostic(&e));
            e.exit_code()
        }
    }
}

struct Outcome {
    body: Body,
    /// Reported after the body is written, e.g. a partial walk.
    error: Option<Error>,
}

struct Body {
    json: Value,
    text: String,
}

fn diagnostic(e: &Error) -> Value {
    let kind = match e {
        Error::GuardExceeded(_) => "guard_exceeded",
        Error::NotSagbiBasis | Error::NonGlobalOrder | Error::OutsideCone => "precondition",
        Error::Parse { .. } | Error::UnknownVariable(_) | Error::ZeroDenominator => "parse",
        _ => "validation",
    };
    json!({"status": "error", "kind": kind, "exit_code": e.exit_code(), "message": e.to_string()})
}

fn emit(cli: &Cli, body: &Body, stdout: &mut dyn Write) -> Result<()> {
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&body.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => body.text.clone(),
    };
    let io_err = |e: std::io::Error| Error::Io(e.to_string());
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(io_err),
        None => stdout.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn read_job(cli: &Cli, stdin: &mut dyn Read) -> Result<Job> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Io(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    Job::from_json(&text)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let job = read_job(cli, stdin)?;
    let guards = job.guards();
    let ok = |body| Ok(Outcome { body, error: None });
    match cli.command {
        Command::Convert => {
            let start = job.start_order()?;
            let target = job.target_order()?;
            let options = WalkOptions {
                guards,
                validate_input: job.validate_input() && !cli.no_validate,
                ..WalkOptions::default()
            };
            let report = walk(&job.generators, &start, &target, &options)?;
            let error = match report.status {
                WalkStatus::Converged => None,
                WalkStatus::GuardExceeded => Some(Error::GuardExceeded(
                    report.guard_message.clone().unwrap_or_default(),
                )),
            };
            Ok(Outcome { body: convert_body(&job, &target, &report, cli.trace), error })
        }
        Command::Sagbi => {
            let order = job.single_order()?;
            let basis = interreduce(&sagbi_construct(&job.generators, &order, &guards)?, &order)?;
            let polys = basis.polynomials();
            let fmt = |p: &Polynomial| order.format(p);
            let json = json!({
                "status": "ok",
                "variables": job.spec.variables,
                "order": OrderSpec::from_order(&order),
                "final_basis": polys.iter().map(fmt).collect::<Vec<_>>(),
                "representations": basis.representations().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            });
            let text = lines(polys.iter().map(fmt));
            ok(Body { json, text })
        }
        Command::Check => {
            let order = job.single_order()?;
            let answer = is_sagbi(&job.generators, &order, &guards)?;
            ok(Body { json: json!({"status": "ok", "is_sagbi": answer}), text: format!("{answer}\n") })
        }
        Command::Initial => {
            let order = job.single_order()?;
            let w = job.weight()?;
            let initials = initial_set(&w, &job.generators);
            let printed: Vec<String> = initials.iter().map(|p| order.format(p)).collect();
            let json = json!({
                "status": "ok",
                "weight": w.entries().iter().map(format_rational).collect::<Vec<_>>(),
                "initials": printed,
            });
            ok(Body { json, text: lines(printed.iter().cloned()) })
        }
        Command::Normalform => {
            let order = job.single_order()?;
            let f = job.polynomial()?;
            let result = subduct_with_limit(&f, &job.generators, &order, guards.max_steps)?;
            let remainder = order.format(&result.remainder);
            let representation = result.representation.to_string();
            let json = json!({"status": "ok", "remainder": remainder, "representation": representation});
            ok(Body { json, text: format!("remainder: {remainder}\nrepresentation: {representation}\n") })
        }
    }
}

fn lines(items: impl Iterator<Item = String>) -> String {
    items.map(|s| s + "\n").collect()
}

#[derive(Serialize)]
struct TraceElement {
    polynomial: String,
    representation: String,
}

#[derive(Serialize)]
struct TraceStep {
    step_index: usize,
    weight: Vec<String>,
    order: OrderSpec,
    initials: Vec<String>,
    h: Vec<TraceElement>,
    lifted: Vec<String>,
    interreduced: Vec<String>,
    u_last: String,
}

fn trace_step(step: &WalkStep) -> TraceStep {
    let fmt = |p: &Polynomial| step.order.format(p);
    TraceStep {
        step_index: step.step_index,
        weight: step.weight.entries().iter().map(format_rational).collect(),
        order: OrderSpec::from_order(&step.order),
        initials: step.initials.iter().map(fmt).collect(),
        h: step
            .h
            .elements()
            .iter()
            .map(|el| TraceElement { polynomial: fmt(&el.polynomial), representation: el.representation.to_string() })
            .collect(),
        lifted: step.lifted.iter().map(fmt).collect(),
        interreduced: step.interreduced.iter().map(fmt).collect(),
        u_last: format_rational(&step.u_last),
    }
}

fn convert_body(job: &Job, target: &TermOrder, report: &WalkReport, trace: bool) -> Body {
    let status = match report.status {
        WalkStatus::Converged => "converged",
        WalkStatus::GuardExceeded => "guard_exceeded",
    };
    let basis: Vec<String> = report.final_basis.iter().map(|p| target.format(p)).collect();
    let mut json = json!({
        "status": status,
        "variables": job.spec.variables,
        "order": OrderSpec::from_order(target),
        "final_basis": basis,
    });
    let mut text = format!("status: {status}\n");
    text.push_str(&lines(basis.iter().cloned()));
    if trace {
        let steps: Vec<TraceStep> = report.steps.iter().map(trace_step).collect();
        for s in &steps {
            text.push_str(&format!(
                "step {}: w = ({}), u_last = {}, basis = [{}]\n",
                s.step_index,
                s.weight.join(", "),
                s.u_last,
                s.interreduced.join(", ")
            ));
        }
        json["steps"] = serde_json::to_value(steps).expect("serializable");
    }
    Body { json, text }
}
