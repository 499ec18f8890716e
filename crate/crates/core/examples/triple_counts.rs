//! Triples of consecutive squares / non-squares: closed form against brute force.

use residue_runs::{brute_runs_both, make_field, triples_closed, CharTable, Result};

fn main() -> Result<()> {
    println!("{:>6} {:>6} {:>6} {:>6}", "q", "case", "M", "N");
    for (p, d) in [
        (7, 1),
        (11, 1),
        (13, 1),
        (17, 1),
        (3, 2),
        (5, 3),
        (13, 2),
        (3, 4),
        (101, 2),
    ] {
        let closed = triples_closed(p, d)?;
        let brute = brute_runs_both(&CharTable::build(&make_field(p, d)?)?, 3)?;
        assert_eq!(closed.counts, brute);
        println!(
            "{:>6} {:>6} {:>6} {:>6}",
            p.pow(d),
            closed.case.label(),
            brute.squares,
            brute.nonsquares
        );
    }
    Ok(())
}
