//! q = s² + t² with s ≡ 1 (mod 4), by Gaussian lifting and by exhaustive search.

use residue_runs::{brute_two_squares, decompose_prime, decompose_q, Result};

fn main() -> Result<()> {
    println!("p = 1000037: {:?}", decompose_prime(1_000_037)?);
    for (p, d) in [(5, 1), (13, 2), (17, 2), (5, 6), (3, 4), (7, 2), (29, 3)] {
        let ts = decompose_q(p, d)?;
        assert_eq!(ts, brute_two_squares(p, d)?);
        println!("{:>6} = ({})² + {}²", ts.q, ts.s, ts.t);
    }
    Ok(())
}
