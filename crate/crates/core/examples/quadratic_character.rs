//! The quadratic character: table build, Euler's criterion and λ(±1), λ(±2).

use residue_runs::{
    lambda_euler, lambda_minus_one, lambda_minus_two, lambda_two, make_field, CharTable, Result,
};

fn main() -> Result<()> {
    for (p, d) in [(7, 1), (13, 1), (3, 2), (5, 3), (17, 2)] {
        let f = make_field(p, d)?;
        let t = CharTable::build(&f)?;
        let (_, sq, nsq) = t.counts();
        let q = f.q();
        println!(
            "q = {q:>4}  squares {sq:>3}  non-squares {nsq:>3}  λ(-1) {:+}  λ(2) {:+}  λ(-2) {:+}",
            lambda_minus_one(q),
            lambda_two(q),
            lambda_minus_two(q)
        );
        for k in [-1, 2, -2] {
            assert_eq!(t.lambda(&f.constant(k)), lambda_euler(&f, &f.constant(k))?);
        }
    }
    Ok(())
}
