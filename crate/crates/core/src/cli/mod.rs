//! The `bzfc` command line.
//!
//! Exit codes: 0 ok, 2 parse error, 3 unresolved name, 4 guard or
//! arithmetic limit, 5 check failure.

pub mod check;
pub mod session;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::arith::{eval_cardinal, eval_parareal, ArithError};
use crate::cardinal::{card_of, finite_lattice};
use crate::checker::{eval, valid_prop, EvalError, Validity, ValidityError};
use crate::formula::parse;
use crate::ncset::NCSet;
use crate::numerosity::{cong_tv, preceq_tv};
use crate::oracle::{cong_brute, preceq_brute};
use check::MAX_CASES;
use session::Session;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NAME: i32 = 3;
pub const EXIT_GUARD: i32 = 4;
pub const EXIT_CHECK: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "bzfc",
    about = "Four-valued logic, non-classical finite sets and their cardinals",
    after_help = "Quantifiers range over the session universe: the `universe` line of the \
                  session file, else the realms of the bound sets, else the empty set alone."
)]
struct Cli {
    /// Session file with `let NAME = SET` and `universe ...` lines.
    #[arg(long, global = true, value_name = "FILE")]
    session: Option<std::path::PathBuf>,
    /// Extra binding, e.g. `--let 'A=<{a}|{}|{}>'`.
    #[arg(long = "let", global = true, value_name = "NAME=SET")]
    lets: Vec<String>,
    /// Universe entries, overriding the session file.
    #[arg(long, global = true, value_name = "ENTRY", num_args = 1..)]
    universe: Option<Vec<String>>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula in the session model; prints t, b, n or f.
    Eval { formula: String },
    /// Decide whether a propositional formula is designated under every assignment.
    Valid { formula: String },
    /// Print a formula in canonical form, abbreviations expanded.
    Parse { formula: String },
    /// Compare the sizes of two sets.
    Cmp {
        a: String,
        b: String,
        /// Also run the brute-force search over countings.
        #[arg(long)]
        brute: bool,
    },
    /// Print the cardinal of a set.
    Card { set: String },
    /// Evaluate a cardinal expression, or a para-real one with --real.
    Arith {
        expr: String,
        #[arg(long)]
        real: bool,
    },
    /// Print the lattice of finite cardinals within the bounds as DOT.
    Lattice { t: u64, b: u64, n: u64 },
    /// Run the seeded self-check suites.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
    },
}

/// A failed command: the exit code and the message for standard error.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, err: impl Display) -> Failure {
    Failure {
        code,
        message: err.to_string(),
    }
}

fn parse_set(text: &str) -> Result<NCSet, Failure> {
    text.parse().map_err(|e| fail(EXIT_PARSE, format!("bad set literal '{text}': {e}")))
}

fn arith_failure(e: ArithError) -> Failure {
    match e {
        ArithError::Overflow | ArithError::NotInvertible(_) => fail(EXIT_GUARD, e),
        _ => fail(EXIT_PARSE, e),
    }
}

fn load_session(cli: &Cli) -> Result<Session, Failure> {
    let mut session = match &cli.session {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
            Session::parse(&text).map_err(|e| fail(EXIT_PARSE, e))?
        }
        None => Session::default(),
    };
    for binding in &cli.lets {
        let (name, literal) = binding
            .split_once('=')
            .ok_or_else(|| fail(EXIT_PARSE, format!("expected NAME=SET, got '{binding}'")))?;
        session.bind(name.trim(), literal.trim()).map_err(|e| fail(EXIT_PARSE, e))?;
    }
    if let Some(entries) = &cli.universe {
        session
            .set_universe(entries.clone())
            .map_err(|e| fail(EXIT_PARSE, e))?;
    }
    Ok(session)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut print = |text: &str| {
        let _ = writeln!(out, "{text}");
    };
    match &cli.command {
        Command::Eval { formula } => {
            let f = parse(formula).map_err(|e| fail(EXIT_PARSE, e))?;
            let model = load_session(cli)?.model().map_err(|e| fail(EXIT_PARSE, e))?;
            let value = eval(&f, &model).map_err(|e| match e {
                EvalError::EmptyUniverse => fail(EXIT_PARSE, e),
                _ => fail(EXIT_NAME, e),
            })?;
            print(&value.to_string());
        }
        Command::Valid { formula } => {
            let f = parse(formula).map_err(|e| fail(EXIT_PARSE, e))?;
            match valid_prop(&f) {
                Ok(Validity::Valid) => print("valid"),
                Ok(Validity::Invalid(witness)) => {
                    let assignment: Vec<String> = witness.iter().map(|(p, v)| format!("{p}={v}")).collect();
                    print(&format!("invalid: {}", assignment.join(" ")));
                }
                Err(e @ ValidityError::TooManyLetters(_)) => return Err(fail(EXIT_GUARD, e)),
                Err(e @ ValidityError::NotPropositional) => return Err(fail(EXIT_PARSE, e)),
            }
        }
        Command::Parse { formula } => {
            let f = parse(formula).map_err(|e| fail(EXIT_PARSE, e))?;
            print(&f.to_string());
        }
        Command::Cmp { a, b, brute } => {
            let (a, b) = (parse_set(a)?, parse_set(b)?);
            print(&format!("cong: {}", cong_tv(&a, &b)));
            print(&format!("preceq: {}", preceq_tv(&a, &b)));
            if *brute {
                let cong = cong_brute(&a, &b).map_err(|e| fail(EXIT_GUARD, e))?;
                let preceq = preceq_brute(&a, &b).map_err(|e| fail(EXIT_GUARD, e))?;
                print(&format!("cong (brute): {cong}"));
                print(&format!("preceq (brute): {preceq}"));
            }
        }
        Command::Card { set } => print(&card_of(&parse_set(set)?).to_string()),
        Command::Arith { expr, real } => {
            let text = if *real {
                eval_parareal(expr).map_err(arith_failure)?.to_string()
            } else {
                eval_cardinal(expr).map_err(arith_failure)?.to_string()
            };
            print(&text);
        }
        Command::Lattice { t, b, n } => {
            let graph = finite_lattice((*t, *b, *n)).map_err(|e| fail(EXIT_GUARD, e))?;
            let dot = graph.to_dot();
            print(dot.trim_end());
        }
        Command::Check { seed, cases } => {
            if *cases > MAX_CASES {
                return Err(fail(EXIT_GUARD, format!("at most {MAX_CASES} cases per run")));
            }
            let reports = check::run_suites(*seed, *cases);
            let _ = write!(out, "{}", check::render_reports(&reports));
            if !reports.iter().all(check::SuiteReport::passed) {
                return Ok(EXIT_CHECK);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinal::MAX_LATTICE_BOUND;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("bzfc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn lattice_bound_is_guarded() {
        let bound = (MAX_LATTICE_BOUND + 1).to_string();
        assert_eq!(run_args(&["lattice", "1", "1", &bound]).0, EXIT_GUARD);
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("lattice"));
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_PARSE);
    }

    #[test]
    fn let_flags() {
        let (code, out, _) = run_args(&["--let", "A=<{a}|{}|{}>", "eval", "a in A"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "b\n"));
        let (code, out, _) = run_args(&["eval", "--let", "A={a}", "--universe", "a", "b", "--", "forall x . x in A"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "f\n"));
    }
}
