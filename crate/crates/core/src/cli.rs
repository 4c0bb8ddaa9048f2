//! The `nomunify` command line.
//!
//! Exit codes: 0 solved, 1 unsolvable, 2 parse or I/O error, 3 the solution
//! failed re-validation under `--check`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::oracle::Enumerator;
use crate::syntax::parse_problem_file;
use crate::term::{Atom, VarName};
use crate::unify::{validate, Solution, Unifier, UnifyError};

pub const EXIT_SOLVED: i32 = 0;
pub const EXIT_UNSOLVABLE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nomunify", version, about = "Nominal unification solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the problems in a file, one per line.
    Solve {
        file: PathBuf,
        /// Re-validate the solution with the freshness and equality judgements.
        #[arg(long)]
        check: bool,
        /// Print every rewrite step.
        #[arg(long)]
        trace: bool,
        /// Emit the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List every term up to a size over the given alphabets.
    #[command(hide = true)]
    Enumerate {
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(long, value_delimiter = ',', default_value = "a,b")]
        atoms: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
    },
}

/// Human-readable result: `NABLA = {..}` and `SIGMA = [..]` lines, or a
/// single `FAIL` line.
pub fn print_solution(result: &Result<Solution, UnifyError>) -> String {
    match result {
        Ok(sol) => format!("NABLA = {}\nSIGMA = {}", sol.env, sol.subst),
        Err(e) => format!("FAIL {e}"),
    }
}

#[derive(Debug, Serialize)]
struct JsonError {
    kind: String,
    problem: String,
}

#[derive(Debug, Serialize)]
struct JsonResult {
    status: &'static str,
    nabla: Vec<[String; 2]>,
    sigma: serde_json::Map<String, serde_json::Value>,
    error: Option<JsonError>,
}

pub fn solution_json(result: &Result<Solution, UnifyError>) -> serde_json::Value {
    let out = match result {
        Ok(sol) => JsonResult {
            status: "solved",
            nabla: sol
                .env
                .iter()
                .map(|(a, x)| [a.name().to_string(), x.name().to_string()])
                .collect(),
            sigma: sol
                .subst
                .iter()
                .map(|(x, t)| (x.name().to_string(), serde_json::Value::String(t.to_string())))
                .collect(),
            error: None,
        },
        Err(e) => JsonResult {
            status: "fail",
            nabla: Vec::new(),
            sigma: serde_json::Map::new(),
            error: Some(JsonError {
                kind: e.kind.to_string(),
                problem: e.problem.to_string(),
            }),
        },
    };
    serde_json::to_value(out).expect("result is always serialisable")
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match &cli.command {
        Command::Solve {
            file,
            check,
            trace,
            json,
        } => {
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: cannot read {}: {e}", file.display())?;
                    return Ok(EXIT_PARSE);
                }
            };
            let problems = match parse_problem_file(&text) {
                Ok(p) => p,
                Err(e) => {
                    writeln!(err, "{}:{e}", file.display())?;
                    return Ok(EXIT_PARSE);
                }
            };
            let mut trace_lines = Vec::new();
            let result = Unifier::new(problems.clone()).run_traced(|step| {
                if *trace {
                    trace_lines.push(step.to_string());
                }
            });
            // Keep stdout valid JSON: the trace goes to stderr in JSON mode.
            for line in &trace_lines {
                if *json {
                    writeln!(err, "{line}")?;
                } else {
                    writeln!(out, "{line}")?;
                }
            }
            if *json {
                writeln!(out, "{}", solution_json(&result))?;
            } else {
                writeln!(out, "{}", print_solution(&result))?;
            }
            match &result {
                Ok(sol) => {
                    if *check && !validate(sol, &problems) {
                        writeln!(err, "internal error: solution does not validate")?;
                        return Ok(EXIT_INVALID);
                    }
                    Ok(EXIT_SOLVED)
                }
                Err(_) => Ok(EXIT_UNSOLVABLE),
            }
        }
        Command::Enumerate { size, atoms, vars } => {
            if *size == 0 {
                writeln!(err, "error: --size must be at least 1")?;
                return Ok(EXIT_PARSE);
            }
            let mut e = Enumerator::new(
                atoms.iter().map(|a| Atom::new(a.as_str())),
                vars.iter().map(|v| VarName::new(v.as_str())),
            );
            for t in e.up_to(*size) {
                writeln!(out, "{t}")?;
            }
            Ok(EXIT_SOLVED)
        }
    }
}
