//! `dwork`: point counts, Frobenius data and Galois checks for the Dwork
//! quintic pencil. Records go to stdout as JSON lines (or CSV); failed
//! assertions print their witness to stderr and exit with status 2. Usage and
//! configuration errors exit with status 1.

mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::Format;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "dwork", version, about = "Arithmetic of the Dwork quintic pencil and its mirror")]
pub struct Cli {
    /// Read further flags from a `key = value` file.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "json-lines")]
    format: Format,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum inner-loop steps for a single enumeration.
    #[arg(long, global = true, default_value_t = dwork_core::ffield::DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count points of one variety over F_q.
    Count(CountArgs),
    /// Frobenius quartic of the mirror over F_q and its mod-2 class.
    Euler(EulerArgs),
    /// Per-prime reciprocity and parity scan.
    Reciprocity(ReciprocityArgs),
    /// Galois group of 4x^5 - 5 psi x^4 + 1 over Q.
    Classify(ClassifyArgs),
    /// The isomorphism S_6 -> Sp_4(F_2).
    S6(S6Args),
    /// Hyperelliptic point counts and torsion sets.
    Curve(CurveArgs),
    /// Randomized substitution identities.
    Identity(IdentityArgs),
    /// Run the full invariant suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Naive,
    Accelerated,
    /// Run both and fail on any mismatch.
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VarietyArg {
    FRoots,
    U,
    V,
    Y,
    XProj,
    ACurve,
    BCurve,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Zeta,
    Torus,
    Both,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, allow_hyphen_values = true)]
    psi: String,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, value_enum)]
    variety: VarietyArg,
    #[arg(long, value_enum, default_value = "accelerated")]
    method: MethodArg,
}

#[derive(Args, Debug)]
pub struct EulerArgs {
    #[arg(long, allow_hyphen_values = true)]
    psi: String,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, value_enum, default_value = "zeta")]
    route: RouteArg,
}

#[derive(Args, Debug)]
pub struct ReciprocityArgs {
    /// Comma-separated reduced fractions.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    psi: Vec<String>,
    #[arg(long, default_value_t = 200)]
    prime_max: u64,
    /// 1: trace parity only; 2: full quartic where feasible.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=2))]
    depth: u32,
    /// Full quartics only up to this prime; defaults to the largest p with
    /// p^8 within the budget.
    #[arg(long)]
    depth2_prime_max: Option<u64>,
    #[arg(long, value_enum, default_value = "zeta")]
    route: RouteArg,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    psi: Vec<String>,
    /// Primes sampled for Frobenius cycle types.
    #[arg(long, default_value_t = dwork_core::galois::DEFAULT_PRIME_BUDGET)]
    prime_budget: u64,
    /// Fail unless every verdict is this group.
    #[arg(long, value_enum)]
    expect: Option<GroupArg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    C5,
    D10,
    F20,
    A5,
    S5,
    Reducible,
}

#[derive(Args, Debug)]
pub struct S6Args {
    /// A permutation in cycle notation, e.g. "(123)(45)"; repeatable.
    #[arg(long)]
    perm: Vec<String>,
    /// Generators of a subgroup separated by ';', e.g. "(12345);(12)"; repeatable.
    #[arg(long)]
    subgroup: Vec<String>,
    /// Verify the whole dictionary and the symmetric cube of SL_2(F_4).
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    C,
    D10,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    /// Counts over F_11 against the torsion sets, plus the factorization identity.
    #[arg(long)]
    f11_checks: bool,
    #[arg(long, value_enum, requires = "p")]
    model: Option<ModelArg>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_enum, default_value = "accelerated")]
    method: MethodArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    WeberD10,
    F20Resolvent,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LabelsArg {
    Corrected,
    Literal,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long, value_enum, default_value = "all")]
    kind: KindArg,
    #[arg(long, default_value_t = 100)]
    trials: u32,
    #[arg(long, default_value_t = dwork_core::dioph::IDENTITY_PRIME)]
    prime: u64,
    #[arg(long, value_enum, default_value = "corrected")]
    labels: LabelsArg,
    /// Perturb the identity; passes iff the perturbation is caught within 3 trials.
    #[arg(long)]
    mutate: bool,
}

fn main() -> ExitCode {
    let args = match config::expand(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout().lock();
    let mut run = commands::Run::new(output::Emitter::new(cli.format, stdout), cli.seed, cli.budget);
    match run.dispatch(&cli.command) {
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
        Ok(()) if run.failures.is_empty() => ExitCode::SUCCESS,
        Ok(()) => {
            for f in &run.failures {
                eprintln!("assertion failed: {f}");
            }
            ExitCode::from(2)
        }
    }
}
