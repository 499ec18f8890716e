//! Quadruples of consecutive squares / non-squares in F_{5^d}, with the sum
//! decomposition behind the closed form.

use residue_runs::sums::QuadrupleSums;
use residue_runs::{brute_runs_both, make_field, quadruples_closed, CharTable, Result};

fn main() -> Result<()> {
    for d in 1..=6 {
        let t = CharTable::build(&make_field(5, d)?)?;
        let sums = QuadrupleSums::compute(&t)?;
        let brute = brute_runs_both(&t, 4)?;
        let closed = quadruples_closed(d)?;
        assert_eq!(brute, closed.counts);
        println!(
            "q = 5^{d}: m = {:>4}  n = {:>4}   S {:>3} T {:>3} U {:>4} V {:>5}",
            brute.squares,
            brute.nonsquares,
            sums.s_total(),
            sums.t_total(),
            sums.u_total(),
            sums.v
        );
    }
    Ok(())
}
