use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use residue_runs::cli::{self, Battery, Exit, Format, SweepConfig};
use residue_runs::{count_report, decompose_q, CountMode, DEFAULT_CAPACITY};

#[derive(Parser)]
#[command(
    name = "residue-runs",
    version,
    about = "Runs of consecutive squares and non-squares in F_q"
)]
struct Args {
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: FormatArg,
    /// Print a generation timestamp to stderr.
    #[arg(long, global = true)]
    timestamps: bool,
    /// Largest field order backed by a full character table.
    #[arg(long, global = true, env = "RESIDUE_RUNS_CAPACITY", default_value_t = DEFAULT_CAPACITY)]
    capacity: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Bew,
    Jacobsthal,
    Quartic,
    Section3,
    Section5,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters, modulus and the special values λ(±1), λ(±2).
    FieldInfo {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
    },
    /// Count runs of one length by brute force and/or closed form.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
        #[arg(long = "len", default_value_t = 3)]
        len: u32,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
    },
    /// Verify closed forms against brute force for every odd prime power up to a bound.
    Sweep {
        #[arg(long)]
        max_q: u64,
        #[arg(long = "len", value_delimiter = ',', default_value = "3")]
        lengths: Vec<u32>,
        /// Brute force only.
        #[arg(long)]
        no_closed: bool,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Check the character-sum identities on one field.
    LemmaCheck {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "all")]
        which: WhichArg,
    },
    /// The normalized two-squares parameters (s, t) of q = p^d.
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
    },
    /// Direct Jacobsthal sum J(a); a is a canonical index, negative values are constants.
    Jacobsthal {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
}

fn run(args: Args) -> residue_runs::Result<Exit> {
    let format = match args.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let (out, exit) = match args.command {
        Command::FieldInfo { p, d } => {
            let info = cli::field_info(p, d, args.capacity)?;
            (info.render(format), Exit::from_pass(info.consistent))
        }
        Command::Count { p, d, len, mode } => {
            let mode = match mode {
                ModeArg::Brute => CountMode::Brute,
                ModeArg::Closed => CountMode::Closed,
                ModeArg::Both => CountMode::Both,
            };
            let report = count_report(p, d, len, mode, args.capacity)?;
            let exit = Exit::from_pass(report.matched != Some(false));
            (cli::render_reports(&[report], format), exit)
        }
        Command::Sweep {
            max_q,
            lengths,
            no_closed,
            jobs,
        } => {
            let outcome = cli::run_sweep(&SweepConfig {
                max_q,
                lengths,
                include_closed: !no_closed,
                jobs,
                capacity: args.capacity,
            })?;
            if format == Format::Csv {
                for f in outcome.failures() {
                    eprintln!("q = {} (len {}): {}", f.q, f.len, f.error);
                }
                eprint!("{}", outcome.summary_line());
            }
            (outcome.render(format), outcome.exit())
        }
        Command::LemmaCheck { p, d, which } => {
            let which = match which {
                WhichArg::Bew => Battery::Bew,
                WhichArg::Jacobsthal => Battery::Jacobsthal,
                WhichArg::Quartic => Battery::Quartic,
                WhichArg::Section3 => Battery::Section3,
                WhichArg::Section5 => Battery::Section5,
                WhichArg::All => Battery::All,
            };
            let report = cli::lemma_check(p, d, which, args.capacity)?;
            (report.render(format), Exit::from_pass(report.pass()))
        }
        Command::Decompose { p, d } => {
            let ts = decompose_q(p, d)?;
            (cli::render_two_squares(&ts, format), Exit::Ok)
        }
        Command::Jacobsthal { p, d, a } => {
            let report = cli::jacobsthal_query(p, d, a, args.capacity)?;
            let exit = Exit::from_pass(report.matched != Some(false));
            (report.render(format), exit)
        }
    };
    if args.timestamps {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or_default();
        eprintln!("generated_at {secs}");
    }
    print!("{out}");
    Ok(exit)
}

fn main() -> ExitCode {
    let exit = match run(Args::parse()) {
        Ok(exit) => exit,
        Err(e) => {
            eprintln!("error: {e}");
            Exit::Usage
        }
    };
    ExitCode::from(exit as u8)
}
