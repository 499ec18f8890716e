//! F_25 built from x² - 2: the element β = √2 and how squares sit in the
//! cosets of F_5.

use residue_runs::{CharTable, FieldCtx, Result, DEFAULT_CAPACITY};

fn main() -> Result<()> {
    let f = FieldCtx::with_modulus(5, &[3, 0, 1], DEFAULT_CAPACITY)?;
    let t = CharTable::build(&f)?;
    let beta = f.generator();
    println!(
        "β² = 2: {}, order of β = {}",
        f.square(&beta) == f.constant(2),
        f.order(&beta)?
    );

    for a in 0..5 {
        let base = f.mul(&f.constant(a), &beta);
        let row: String = (0..5)
            .map(|c| match t.lambda(&f.add(&base, &f.constant(c))) {
                1 => '■',
                -1 => '·',
                _ => '0',
            })
            .collect();
        println!("{a}β + {{0..4}}: {row}");
    }
    Ok(())
}
