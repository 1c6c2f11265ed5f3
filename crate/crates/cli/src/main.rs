use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use constacode::algebra::registry;
use constacode_cli::commands::{self, AnalyzeOptions, Format};
use constacode_cli::spec::parse_field;
use constacode_cli::suites::Ctx;
use constacode_cli::{exit, CliError, Output};

#[derive(Parser)]
#[command(name = "constacode", version, about = "Construct and analyze two families of constacyclic codes")]
struct Cli {
    /// Field modulus as p^K:c0,...,cK (ascending); defaults to the registry.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for randomized checks and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Enumeration cap in codewords (overrides CONSTACODE_CAP).
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from a family spec such as cprime:q=3,m=4,r=2,ell=1.
    Construct { spec: String },
    /// Distance and weight distribution of a family spec or code JSON file.
    Analyze {
        input: String,
        #[arg(long)]
        distance: bool,
        #[arg(long)]
        weights: bool,
        /// Analyze the dual code.
        #[arg(long)]
        dual: bool,
    },
    /// Run a verification suite: paper-examples, theorems or all.
    Verify {
        suite: String,
        /// Include the long-running checks.
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value = "human")]
        format: String,
    },
    /// Parameter table, e.g. `table cprime q=3 m=4 r=2 ell=1..3`.
    Table {
        family: String,
        ranges: Vec<String>,
        #[arg(long, default_value = "human")]
        format: String,
    },
    /// Cosets, registry fields and the internals of a code.
    #[command(subcommand)]
    Inspect(Inspect),
}

#[derive(Subcommand)]
enum Inspect {
    /// q-cyclotomic cosets modulo MODULUS.
    Cosets {
        q: u64,
        modulus: u64,
        /// Also list the leaders congruent to 1 mod R.
        #[arg(long)]
        r: Option<u64>,
    },
    /// The field given by --field, or the registry field GF(p^K).
    Field { p: Option<u32>, k: Option<u32> },
    /// Generator, check polynomial and defining set of a family spec.
    Code { spec: String },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let field = cli.field.as_deref().map(parse_field).transpose()?;
    let cap = cli.cap.unwrap_or_else(constacode::analysis::cap_from_env);
    match cli.command {
        Command::Construct { spec } => commands::construct(&spec, field),
        Command::Analyze { input, distance, weights, dual } => {
            let opts = AnalyzeOptions { distance, weights, dual, cap: Some(cap), seed: cli.seed };
            commands::analyze(&input, field, &opts)
        }
        Command::Verify { suite, extended, format } => {
            if field.is_some() {
                return Err(CliError::Usage("verify uses the registry fields; drop --field".into()));
            }
            commands::verify(&suite, extended, &Ctx { cap, seed: cli.seed }, format.parse()?)
        }
        Command::Table { family, ranges, format } => {
            if field.is_some() {
                return Err(CliError::Usage("table uses the registry fields; drop --field".into()));
            }
            let format: Format = format.parse()?;
            commands::table(&family, &ranges, format, cap)
        }
        Command::Inspect(Inspect::Cosets { q, modulus, r }) => commands::inspect_cosets(q, modulus, r),
        Command::Inspect(Inspect::Field { p, k }) => {
            let f = match (field, p, k) {
                (Some(f), None, None) => f,
                (None, Some(p), Some(k)) => {
                    registry::default_field(p, k).map_err(|e| CliError::Construction(e.to_string()))?
                }
                _ => return Err(CliError::Usage("give either --field or both P and K".into())),
            };
            Ok(commands::inspect_field(&f))
        }
        Command::Inspect(Inspect::Code { spec }) => commands::inspect_code(&spec, field),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            let _ = std::io::stderr().write_all(out.stderr.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("constacode: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
