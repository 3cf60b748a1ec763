//! The `binders` command line. Every subcommand loads its input, calls one
//! library checker and prints the resulting [`RunReport`].

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::displayed::{check_displayed_category, total_category, DisplayedCategory};
use crate::fincat::{check_category_laws, FinCategory};
use crate::monoidal::{check_monoidal_laws, MonoidalCategory};
use crate::omega::demos::{evenness_demo, param_initial_demo};
use crate::report::{LawReport, Violation};
use crate::signature::{parse_signature, BindingSignature};
use crate::syntax::{
    check_monad_laws_with, check_term, count_terms, enumerate_terms, parse_term, subst_via_mendler, substitute,
    substitute_without_lift, LawBounds, SubstFn, Substitution,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "binders", version, about = "Exhaustive law checks for finite categorical models of syntax with binders")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Substitution that does not lift under binders.
    NoLift,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the laws of a finite category document.
    CheckCat { file: PathBuf },
    /// Check a monoidal category document: base laws, whiskering, unitors,
    /// associator, triangle and pentagon.
    CheckMonoidal { file: PathBuf },
    /// Check a displayed category document and its total category.
    CheckDisplayed { file: PathBuf },
    /// List the terms of depth < DEPTH in scope SCOPE.
    GenTerms {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        scope: usize,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Substitute IMAGE_i for variable i in TERM (which lives in scope SCOPE).
    Subst {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long, default_value_t = 2)]
        scope: usize,
        /// Scope of the images and of the result.
        #[arg(long)]
        target: usize,
        term: String,
        images: Vec<String>,
        /// Compute by Mendler iteration instead of structural recursion.
        #[arg(long)]
        mendler: bool,
    },
    /// Exhaustively check the substitution monad laws.
    Laws {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        scope: usize,
        /// Largest number of terms per scope, or substitutions per pair of
        /// scopes, that may be enumerated.
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
        /// Check a deliberately broken substitution instead.
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
    /// Evenness on the naturals by generalized Mendler iteration.
    MendlerDemo {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Parametrized initiality for labelled binary trees.
    ParamInitialDemo {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckCat { .. } => "check-cat",
            Command::CheckMonoidal { .. } => "check-monoidal",
            Command::CheckDisplayed { .. } => "check-displayed",
            Command::GenTerms { .. } => "gen-terms",
            Command::Subst { .. } => "subst",
            Command::Laws { .. } => "laws",
            Command::MendlerDemo { .. } => "mendler-demo",
            Command::ParamInitialDemo { .. } => "param-initial-demo",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn from_laws(command: &str, laws: LawReport, elapsed_ms: u64) -> Self {
        Self {
            command: command.to_string(),
            status: if laws.passed() { Status::Pass } else { Status::Fail },
            checks_run: laws.checks_run,
            violations: laws.violations,
            elapsed_ms,
        }
    }

    pub fn error(command: &str, elapsed_ms: u64) -> Self {
        Self {
            command: command.to_string(),
            status: Status::Error,
            checks_run: 0,
            violations: Vec::new(),
            elapsed_ms,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => EXIT_PASS,
            Status::Fail => EXIT_FAIL,
            Status::Error => EXIT_ERROR,
        }
    }

    pub fn render_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "error",
        };
        let mut out = format!(
            "{}: {status} ({} checks, {} violations, {} ms)\n",
            self.command,
            self.checks_run,
            self.violations.len(),
            self.elapsed_ms
        );
        for v in &self.violations {
            out.push_str(&format!("  {}: {}\n", v.law, v.witness));
        }
        out
    }
}

/// Result of running one command: the report plus any lines the command
/// prints before it (terms, substitution results) and an error diagnostic.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub output: Vec<String>,
    pub diagnostic: Option<String>,
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))
}

fn load_signature(path: &Path) -> anyhow::Result<BindingSignature> {
    parse_signature(&read(path)?).map_err(|e| anyhow::anyhow!("{}:{e}", path.display()))
}

fn ensure_within(what: &str, count: u128, bound: usize) -> anyhow::Result<()> {
    anyhow::ensure!(count <= bound as u128, "enumeration bound {bound} exceeded: {count} {what}");
    Ok(())
}

fn run_command(command: &Command, output: &mut Vec<String>) -> anyhow::Result<LawReport> {
    match command {
        Command::CheckCat { file } => {
            let c = FinCategory::from_json(&read(file)?)?;
            Ok(check_category_laws(&c))
        }
        Command::CheckMonoidal { file } => {
            let m = MonoidalCategory::from_json(&read(file)?)?;
            Ok(check_monoidal_laws(&m)?)
        }
        Command::CheckDisplayed { file } => {
            let d = DisplayedCategory::load(file)?;
            let mut r = check_category_laws(&d.base).prefixed("base");
            r.merge(check_displayed_category(&d));
            r.merge(check_category_laws(&total_category(&d).category).prefixed("total"));
            Ok(r)
        }
        Command::GenTerms {
            sig,
            depth,
            scope,
            bound,
        } => {
            let sig = load_signature(sig)?;
            ensure_within("terms", count_terms(&sig, *scope, *depth), *bound)?;
            let terms = enumerate_terms(&sig, *scope, *depth);
            let mut r = LawReport::new();
            for t in &terms {
                r.check("scope-correctness", check_term(&sig, t).is_ok(), || t.to_string());
                output.push(t.to_string());
            }
            Ok(r)
        }
        Command::Subst {
            sig,
            scope,
            target,
            term,
            images,
            mendler,
        } => {
            let sig = load_signature(sig)?;
            let t = parse_term(&sig, term, *scope)?;
            let images = images
                .iter()
                .map(|i| parse_term(&sig, i, *target).map(|t| t.body))
                .collect::<Result<Vec<_>, _>>()?;
            let sigma = Substitution::new(*scope, *target, images)?;
            let result = if *mendler {
                subst_via_mendler(&sig, (*scope).max(*target), 1)?.apply(&t, &sigma)?
            } else {
                substitute(&sig, &t, &sigma)?
            };
            output.push(result.to_string());
            let mut r = LawReport::new();
            r.check("scope-correctness", check_term(&sig, &result).is_ok(), || result.to_string());
            Ok(r)
        }
        Command::Laws {
            sig,
            depth,
            scope,
            bound,
            inject_fault,
        } => {
            let sig = load_signature(sig)?;
            let bounds = LawBounds::new(*depth, *scope);
            for n in 0..=*scope {
                ensure_within("terms", count_terms(&sig, n, bounds.depth), *bound)?;
                let images = count_terms(&sig, n, bounds.subst_depth);
                for m in 0..=*scope {
                    let subs = images.checked_pow(m as u32).unwrap_or(u128::MAX);
                    ensure_within("substitutions", subs, *bound)?;
                }
            }
            let subst: SubstFn = match inject_fault {
                None => substitute,
                Some(Fault::NoLift) => substitute_without_lift,
            };
            Ok(check_monad_laws_with(&sig, bounds, subst))
        }
        Command::MendlerDemo { depth, bound } => Ok(evenness_demo(*depth, *bound)?),
        Command::ParamInitialDemo { depth } => Ok(param_initial_demo(*depth)?),
    }
}

/// Runs a parsed command without printing anything.
pub fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut output = Vec::new();
    let result = run_command(&cli.command, &mut output);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let name = cli.command.name();
    match result {
        Ok(laws) => Outcome {
            report: RunReport::from_laws(name, laws, elapsed_ms),
            output,
            diagnostic: None,
        },
        Err(e) => Outcome {
            report: RunReport::error(name, elapsed_ms),
            output: Vec::new(),
            diagnostic: Some(format!("{e:#}")),
        },
    }
}

/// Parses `args` (including the program name), runs the command, prints the
/// report, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(&cli);
    if let Some(d) = &outcome.diagnostic {
        eprintln!("error: {d}");
    }
    // A closed stdout (e.g. piping into `head`) is not an error of the check.
    let mut out = std::io::stdout().lock();
    if cli.json {
        let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
        let _ = writeln!(out, "{text}");
    } else {
        for line in &outcome.output {
            let _ = writeln!(out, "{line}");
        }
        let _ = write!(out, "{}", outcome.report.render_text());
    }
    outcome.report.exit_code()
}
