//! Lower bounds on the triple counts and the fields with no triple at all.

use residue_runs::arith::odd_prime_powers_up_to;
use residue_runs::{bounds_check, existence_check, Result};

fn main() -> Result<()> {
    let mut equal = Vec::new();
    let mut none = Vec::new();
    for pp in odd_prime_powers_up_to(10_000) {
        let b = bounds_check(pp.p, pp.d)?;
        assert!(b.ok(), "{b:?}");
        if b.nonsquare_bound.equality || b.square_bound.equality {
            equal.push(pp.q);
        }
        let e = existence_check(pp.p, pp.d)?;
        assert!(e.consistent());
        if !e.square_triple_exists || !e.nonsquare_triple_exists {
            none.push((pp.q, e.square_triple_exists, e.nonsquare_triple_exists));
        }
    }
    println!("bounds attained with equality at q = {equal:?}");
    println!("fields missing a triple (q, has square triple, has non-square triple):");
    for row in none {
        println!("  {row:?}");
    }
    Ok(())
}
