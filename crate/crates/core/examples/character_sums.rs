//! Character sums: a quadratic sum, Jacobsthal sums and the quartic sum V.

use residue_runs::{
    bew_sum, jacobsthal_closed, jacobsthal_direct, make_field, quartic_sum, quartic_sum_closed,
    CharTable, Result,
};

fn main() -> Result<()> {
    let f = make_field(13, 2)?;
    let t = CharTable::build(&f)?;
    let b = f.generator();
    let c = f.constant(5);
    println!("Σ λ(α² + xα + 5) over F_169 = {}", bew_sum(&t, &b, &c)?);

    for a in [f.constant(1), f.constant(2), f.square(&b)] {
        let fourth = t.is_fourth_power(&a)?;
        println!(
            "J(#{}) = {:>3}   closed form {:>3}   fourth power: {fourth}",
            f.index_of(&a),
            jacobsthal_direct(&t, &a)?,
            jacobsthal_closed(13, 2, fourth)?
        );
    }

    for d in 1..=5 {
        let t = CharTable::build(&make_field(5, d)?)?;
        println!(
            "V over F_5^{d}: {:>4} (closed {:>4})",
            quartic_sum(&t)?,
            quartic_sum_closed(d)?
        );
    }
    Ok(())
}
