//! Command-line interface for the unitriangular-group character library.
//!
//! Subcommands:
//!
//! * `ring` — ring diagnostics: size, fixed set, admissible characters.
//! * `chars` — the full additive character table with admissibility flags.
//! * `verify` — run the whole statement suite on `P` and emit a JSON report;
//!   one `PASS`/`FAIL` line per statement goes to stderr.
//! * `character` — the full character table of one family member, with an
//!   optional sparse matrix dump of its monomial model.
//! * `classify` — enumerate the family and partition it into isomorphism
//!   classes, comparing against the predicted invariant.
//!
//! Reports are deterministic: rerunning a command byte-for-byte reproduces
//! its output regardless of `--threads`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument or ring parse
//! error, 3 group size over the cap, 4 invalid family label.

use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use unirep::group::{GroupError, UnipotentGroup};
use unirep::reps::RepError;
use unirep::ring::InvolutiveRing;
use unirep::verify::{
    chars_report, character_report, classify_report, ring_report, verify_suite,
};
use unirep::LinearCharacter;
use unirep::RepLabel;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BAD_ARGS: u8 = 2;
const EXIT_OVER_CAP: u8 = 3;
const EXIT_BAD_LABEL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "unirep",
    about = "Exact character theory of unitriangular isometry groups over finite involutive rings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArg {
    /// Ring spec: `Z/m` or `Z/m[t^2+c*t+d]` (for example `Z/9` or `Z/3[t^2+1]`)
    #[arg(long)]
    ring: String,
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    ring: RingArg,

    /// Module rank n (the group lives on a rank-2n module)
    #[arg(long)]
    n: usize,

    /// Refuse to enumerate groups larger than this many elements
    #[arg(long, default_value_t = 200_000)]
    cap: u128,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,

    /// Size of the worker pool (overrides RAYON_NUM_THREADS); output does
    /// not depend on it
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct LabelArgs {
    /// Comma-separated index set D, e.g. `1,3`
    #[arg(long = "D", value_name = "D")]
    d: String,

    /// Comma-separated character exponents, one entry per index in D; each
    /// entry is `k` over `Z/m` and `k1:k2` over a quadratic extension
    #[arg(long)]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// Ring diagnostics and the list of left-admissible characters
    Ring {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Every additive character with admissibility and fixed-set restriction
    Chars {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the statement suite on the group and report each check
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The full character table of one family member
    Character {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        label: LabelArgs,
        /// Also dump the monomial model as sparse (row, column, exponent) triples
        #[arg(long)]
        dump_rep: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Partition the whole family into isomorphism classes
    Classify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Ring { ring, output } => {
            configure_threads(&output)?;
            let ring = parse_ring(&ring.ring)?;
            emit(&output, &ring_report(&ring))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chars { ring, output } => {
            configure_threads(&output)?;
            let ring = parse_ring(&ring.ring)?;
            emit(&output, &chars_report(&ring))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { group, output } => {
            configure_threads(&output)?;
            let group = build_group(&group)?;
            let report = verify_suite(&group);
            for check in &report.checks {
                eprintln!(
                    "{} {} — {}",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.id,
                    check.paper_statement
                );
            }
            emit(&output, &report)?;
            if report.all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY_FAILED))
            }
        }
        Command::Character {
            group,
            label,
            dump_rep,
            output,
        } => {
            configure_threads(&output)?;
            let group = build_group(&group)?;
            let label = parse_label(&group, &label)?;
            let report = character_report(&group, &label, dump_rep).map_err(rep_failure)?;
            emit(&output, &report)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { group, output } => {
            configure_threads(&output)?;
            let group = build_group(&group)?;
            let report = classify_report(&group).map_err(rep_failure)?;
            if let Some(reason) = &report.skip_reason {
                eprintln!("classification skipped: {reason}");
            }
            emit(&output, &report)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn configure_threads(output: &OutputArgs) -> Result<(), Failure> {
    if let Some(threads) = output.threads {
        if threads == 0 {
            return Err(fail(EXIT_BAD_ARGS, "--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| fail(EXIT_BAD_ARGS, format!("worker pool: {e}")))?;
    }
    Ok(())
}

fn parse_ring(spec: &str) -> Result<InvolutiveRing, Failure> {
    InvolutiveRing::parse(spec).map_err(|e| fail(EXIT_BAD_ARGS, format!("ring spec: {e}")))
}

fn build_group(args: &GroupArgs) -> Result<UnipotentGroup, Failure> {
    let ring = parse_ring(&args.ring.ring)?;
    if args.n == 0 {
        return Err(fail(EXIT_BAD_ARGS, "--n must be at least 1"));
    }
    UnipotentGroup::new(ring, args.n, args.cap).map_err(|e| match e {
        GroupError::OrderExceedsCap { order, cap } => fail(
            EXIT_OVER_CAP,
            format!("group order {order} exceeds the cap {cap}; raise --cap to proceed"),
        ),
        other => fail(EXIT_BAD_ARGS, other.to_string()),
    })
}

fn parse_label(group: &UnipotentGroup, args: &LabelArgs) -> Result<RepLabel, Failure> {
    let ring = group.ring();
    let d = parse_index_set(&args.d)?;
    let lambdas = parse_lambdas(ring, &args.lambda)?;
    RepLabel::new(ring, group.rank(), &d, &lambdas).map_err(|e| match e {
        RepError::NotAdmissible { position } => fail(
            EXIT_BAD_LABEL,
            format!(
                "lambda at position {position} is not left admissible; run `unirep ring` to list \
                 the admissible characters"
            ),
        ),
        other => fail(EXIT_BAD_LABEL, other.to_string()),
    })
}

fn parse_index_set(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| fail(EXIT_BAD_ARGS, format!("index set entry `{part}`")))
        })
        .collect()
}

fn parse_lambdas(ring: &InvolutiveRing, text: &str) -> Result<Vec<LinearCharacter>, Failure> {
    text.split(',')
        .map(|part| {
            let exps: Result<Vec<u64>, Failure> = part
                .trim()
                .split(':')
                .map(|piece| {
                    piece.trim().parse::<u64>().map_err(|_| {
                        fail(EXIT_BAD_ARGS, format!("character exponent `{piece}`"))
                    })
                })
                .collect();
            let exps = exps?;
            LinearCharacter::new(ring, &exps).map_err(|e| {
                fail(
                    EXIT_BAD_ARGS,
                    format!("character entry `{}`: {e}", part.trim()),
                )
            })
        })
        .collect()
}

fn emit<T: Serialize>(output: &OutputArgs, report: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(report)
        .map_err(|e| fail(EXIT_BAD_ARGS, format!("serialize: {e}")))?;
    text.push('\n');
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| fail(EXIT_BAD_ARGS, format!("write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| fail(EXIT_BAD_ARGS, format!("stdout: {e}")))
        }
    }
}

/// Map library errors from label-driven commands onto exit codes: anything
/// about the label itself is a label error, the rest are argument errors.
fn rep_failure(err: RepError) -> Failure {
    match err {
        RepError::NotAdmissible { .. }
        | RepError::BadIndexSet
        | RepError::LambdaCount { .. }
        | RepError::ConductorMismatch { .. } => fail(EXIT_BAD_LABEL, err.to_string()),
        other => fail(EXIT_BAD_ARGS, other.to_string()),
    }
}
