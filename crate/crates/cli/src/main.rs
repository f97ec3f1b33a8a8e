//! `jet`: build jet schemes of affine schemes and query them.

mod commands;
mod error;
mod spec;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use jetscheme::Field;

use error::CliError;
use spec::{split_list, JobSpec, RingSpec};

#[derive(Parser, Debug)]
#[command(name = "jet", version, about = "Jet schemes as explicit graded ideals")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also report timings.
    #[arg(long, global = true)]
    verbose: bool,
    /// `rational` (default) or `prime:<p>`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// JSON job spec file, or `-` for stdin.
    #[arg(long)]
    spec: Option<String>,
    /// Comma-separated base variables.
    #[arg(long)]
    vars: Option<String>,
    /// Comma-separated generators; may be repeated.
    #[arg(long = "ideal")]
    ideal: Vec<String>,
    /// Monomial order of the base ring: grevlex or lex.
    #[arg(long)]
    order: Option<String>,
    /// Jet order.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the jet equations with their weights.
    Compute(Input),
    /// Krull dimension of the jet scheme.
    Dim(Input),
    /// Decide whether a jet polynomial lies in the jet ideal.
    Member {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        f: Option<String>,
        /// Also test the square of f.
        #[arg(long)]
        with_square: bool,
    },
    /// Dimension of the jets lying over a point.
    Fiber {
        #[command(flatten)]
        input: Input,
        /// Comma-separated coordinates.
        #[arg(long)]
        point: Option<String>,
    },
    /// Closure of the jets over the smooth locus.
    MainComponent(Input),
    /// Singular locus of the jet scheme.
    Sing(Input),
    /// Check the built-in claims and print a PASS/FAIL table.
    PaperExamples {
        /// Claim ids or id prefixes; may be repeated or comma-separated.
        #[arg(long)]
        filter: Vec<String>,
        /// Include the slower extra witnesses.
        #[arg(long)]
        slow: bool,
        /// Run claims one at a time.
        #[arg(long)]
        sequential: bool,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "rational" | "QQ" | "qq" => Ok(Field::Rational),
        _ => {
            let p = s
                .strip_prefix("prime:")
                .ok_or_else(|| format!("expected `rational` or `prime:<p>`, got `{s}`"))?;
            let p: u32 = p.parse().map_err(|_| format!("bad modulus `{p}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

impl Input {
    /// The job described by `--spec`, overridden by explicit flags.
    fn job(&self, field: Option<Field>) -> Result<JobSpec, CliError> {
        let mut job = match &self.spec {
            Some(path) => JobSpec::load(path)?,
            None => {
                let vars = self
                    .vars
                    .as_deref()
                    .ok_or_else(|| CliError::Input("either --spec or --vars is required".into()))?;
                JobSpec {
                    ring: RingSpec {
                        vars: split_list(vars),
                        order: "grevlex".into(),
                        modulus: None,
                    },
                    generators: Vec::new(),
                    m: 0,
                    point: None,
                    f: None,
                    d: None,
                    n: None,
                }
            }
        };
        if self.spec.is_some() {
            if let Some(vars) = &self.vars {
                job.ring.vars = split_list(vars);
            }
        }
        if !self.ideal.is_empty() {
            job.generators = self.ideal.iter().flat_map(|s| split_list(s)).collect();
        }
        if let Some(order) = &self.order {
            job.ring.order = order.clone();
        }
        if let Some(m) = self.m {
            job.m = m;
        }
        match field {
            Some(Field::Prime(p)) => job.ring.modulus = Some(p),
            Some(Field::Rational) => job.ring.modulus = None,
            None => {}
        }
        Ok(job)
    }
}

fn budget_limit() -> Result<Duration, CliError> {
    match std::env::var("JET_BUDGET_MS") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Duration::from_millis)
            .map_err(|_| CliError::Input(format!("JET_BUDGET_MS must be a number of milliseconds, got `{v}`"))),
        Err(_) => Ok(Duration::from_millis(60_000)),
    }
}

fn run(cli: &Cli) -> Result<commands::Report, CliError> {
    let limit = budget_limit()?;
    let ctx = commands::Ctx {
        limit,
        verbose: cli.verbose,
    };
    match &cli.command {
        Command::Compute(input) => commands::compute(&ctx, &input.job(cli.field)?),
        Command::Dim(input) => commands::dim(&ctx, &input.job(cli.field)?),
        Command::Member { input, f, with_square } => {
            let mut job = input.job(cli.field)?;
            if f.is_some() {
                job.f = f.clone();
            }
            commands::member(&ctx, &job, *with_square)
        }
        Command::Fiber { input, point } => {
            let mut job = input.job(cli.field)?;
            if let Some(p) = point {
                job.point = Some(split_list(p));
            }
            commands::fiber(&ctx, &job)
        }
        Command::MainComponent(input) => commands::main_component(&ctx, &input.job(cli.field)?),
        Command::Sing(input) => commands::sing(&ctx, &input.job(cli.field)?),
        Command::PaperExamples {
            filter,
            slow,
            sequential,
        } => {
            let filter = filter.iter().flat_map(|f| split_list(f)).collect();
            commands::paper_examples(&ctx, cli.field.unwrap_or(Field::Rational), filter, *slow, *sequential)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
