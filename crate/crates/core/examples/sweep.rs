//! Sweep every odd prime power up to a bound (default 5000), comparing brute
//! force with the closed forms for runs of length 3 and 4, and print the
//! quadruple rows that have a closed form.
//!
//!     cargo run --release --example sweep -- 20000

use residue_runs::cli::{run_sweep, Format, SweepConfig};
use residue_runs::{Result, DEFAULT_CAPACITY};

fn main() -> Result<()> {
    let max_q = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5_000);
    let outcome = run_sweep(&SweepConfig {
        max_q,
        lengths: vec![3, 4],
        include_closed: true,
        jobs: 0,
        capacity: DEFAULT_CAPACITY,
    })?;
    let rows: Vec<_> = outcome
        .reports()
        .filter(|r| r.len == 4 && r.closed.is_some())
        .cloned()
        .collect();
    print!(
        "{}",
        residue_runs::cli::render_reports(&rows, Format::Table)
    );
    println!("{}", outcome.summary_line());
    Ok(())
}
