//! `fdl`: sweeps, verification, and basis inspection for the two-fermion
//! decoherence simulator.

mod expr;
mod sweep;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdl_core::channels::{adc, pdc, InitialStateSpec, KrausChannel};
use fdl_core::hilbert::{build_embedding, FermionPairState, PAIR_DIM, SINGLE_DIM};
use fdl_core::measures::{concurrence, report, LogBase};
use fdl_core::verify::{self, Suite, VerifyConfig};
use fdl_core::Error as CoreError;

use sweep::SweepRow;

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_NORMALIZED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fdl",
    about = "Entanglement dynamics of two identical spin-3/2 fermions under decoherence",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a decoherence channel over a p-grid and emit every quantifier.
    Sweep(SweepArgs),
    /// Run the verification checks and report pass/fail per check.
    Verify(VerifyArgs),
    /// Print the six antisymmetric basis states with their expansions and
    /// concurrences.
    Basis,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ChannelArg {
    Adc,
    Pdc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LogBaseArg {
    E,
    #[value(name = "2")]
    Two,
}

impl From<LogBaseArg> for LogBase {
    fn from(value: LogBaseArg) -> Self {
        match value {
            LogBaseArg::E => LogBase::E,
            LogBaseArg::Two => LogBase::Two,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Decoherence channel.
    #[arg(long, value_enum)]
    channel: ChannelArg,

    /// Preset (fig1, fig2, fig3, ghz-check) or an expression such as
    /// "0.6|2,1> + 0.8|2,-1>"; amplitudes refer to the |j,m> kets.
    #[arg(long)]
    initial: String,

    /// Number of grid points; p = k/(steps-1) includes both endpoints.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
    steps: u64,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Base for the Q columns.
    #[arg(long = "log-base", value_enum, default_value_t = LogBaseArg::E)]
    log_base: LogBaseArg,

    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Accept a non-normalized initial state and normalize it.
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
    Properties,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep(args) => run_sweep(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Basis => run_basis(),
    }
}

fn build_channel(kind: ChannelArg, p: f64) -> Result<KrausChannel, CoreError> {
    match kind {
        ChannelArg::Adc => adc(p),
        ChannelArg::Pdc => pdc(p),
    }
}

/// Resolves `--initial` into a state plus an optional grid override
/// (the ghz-check preset evaluates the fig3 state at p = 1 only).
fn resolve_initial(
    text: &str,
    normalize: bool,
) -> Result<(FermionPairState, Option<Vec<f64>>), u8> {
    let (spec, grid_override) = match text {
        "fig1" => (InitialStateSpec::fig1(), None),
        "fig2" => (InitialStateSpec::fig2(), None),
        "fig3" => (InitialStateSpec::fig3(), None),
        "ghz-check" => (InitialStateSpec::fig3(), Some(vec![1.0])),
        other => match expr::parse_initial(other) {
            Ok(spec) => (spec, None),
            Err(err) => {
                eprintln!("error: {err}");
                return Err(EXIT_PARSE);
            }
        },
    };
    match spec.to_state(normalize) {
        Ok(state) => Ok((state, grid_override)),
        Err(CoreError::NotNormalized { norm_sqr }) => {
            eprintln!(
                "error: initial state has squared norm {norm_sqr:.12}; pass --normalize to rescale"
            );
            Err(EXIT_NOT_NORMALIZED)
        }
        Err(err) => {
            eprintln!("error: {err}");
            Err(EXIT_PARSE)
        }
    }
}

fn run_sweep(args: &SweepArgs) -> ExitCode {
    let (state, grid_override) = match resolve_initial(&args.initial, args.normalize) {
        Ok(resolved) => resolved,
        Err(code) => return ExitCode::from(code),
    };
    let grid: Vec<f64> = grid_override.unwrap_or_else(|| {
        let steps = args.steps;
        (0..steps)
            .map(|k| k as f64 / (steps - 1) as f64)
            .collect()
    });

    let base: LogBase = args.log_base.into();
    let mut rows = Vec::with_capacity(grid.len());
    for &p in &grid {
        let channel = match build_channel(args.channel, p) {
            Ok(channel) => channel,
            Err(err) => {
                eprintln!("error: {err}");
                return ExitCode::from(EXIT_FAILURE);
            }
        };
        match report(&channel.dilate(&state), base) {
            Ok(rep) => rows.push(SweepRow::from_report(p, &rep)),
            Err(err) => {
                eprintln!("error: {err}");
                return ExitCode::from(EXIT_FAILURE);
            }
        }
    }

    let write_result = match &args.out {
        Some(path) => std::fs::File::create(path).and_then(|file| {
            let mut writer = std::io::BufWriter::new(file);
            match args.format {
                FormatArg::Csv => sweep::write_csv(&mut writer, &rows)?,
                FormatArg::Json => sweep::write_json(&mut writer, &rows)?,
            }
            writer.flush()
        }),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            match args.format {
                FormatArg::Csv => sweep::write_csv(&mut lock, &rows),
                FormatArg::Json => sweep::write_json(&mut lock, &rows),
            }
        }
    };
    if let Err(err) = write_result {
        eprintln!("error: {err}");
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::SUCCESS
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let cfg = match VerifyConfig::from_env() {
        Ok(cfg) => cfg,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let suite = match args.suite {
        SuiteArg::Paper => Suite::Paper,
        SuiteArg::Properties => Suite::Properties,
        SuiteArg::All => Suite::All,
    };
    let results = verify::run(suite, &cfg);
    let mut failures = 0usize;
    for result in &results {
        println!(
            "{} {:28} max-dev {:9.3e}  tol {:7.1e}  {}",
            if result.passed { "PASS" } else { "FAIL" },
            result.name,
            result.max_deviation.max(0.0),
            result.tolerance,
            result.detail,
        );
        if !result.passed {
            failures += 1;
        }
    }
    println!(
        "{} of {} checks passed (curve tolerance {:.1e})",
        results.len() - failures,
        results.len(),
        cfg.curve_tol,
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn fmt_coefficient(z: num_complex::Complex64) -> Option<String> {
    if z.norm() == 0.0 {
        None
    } else if z.im == 0.0 {
        Some(format!("{:+.10}", z.re))
    } else if z.re == 0.0 {
        Some(format!("{:+.10}i", z.im))
    } else {
        Some(format!("+({:.10}{:+.10}i)", z.re, z.im))
    }
}

fn run_basis() -> ExitCode {
    let embedding = build_embedding();
    let labels = ["|2,2>", "|2,1>", "|2,0>", "|2,-1>", "|2,-2>", "i|0,0>"];
    println!("antisymmetric two-fermion basis");
    println!("single-particle levels |1>..|4> carry m_s = +3/2, +1/2, -1/2, -3/2");
    println!();
    for (k, label) in labels.iter().enumerate() {
        let column = embedding.matrix().column(k);
        let mut terms = Vec::new();
        for row in 0..column.len() {
            if let Some(coefficient) = fmt_coefficient(column[row]) {
                let level_a = row / SINGLE_DIM + 1;
                let level_b = row % SINGLE_DIM + 1;
                terms.push(format!("{coefficient}|{level_a}{level_b}>"));
            }
        }
        let c = match concurrence(&FermionPairState::basis_state(k).density()) {
            Ok(c) => c,
            Err(err) => {
                eprintln!("error: {err}");
                return ExitCode::from(EXIT_FAILURE);
            }
        };
        println!("{:7} = {:<60}  C = {c:.6}", label, terms.join(" "));
    }
    debug_assert_eq!(labels.len(), PAIR_DIM);
    ExitCode::SUCCESS
}
