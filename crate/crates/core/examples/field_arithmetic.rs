//! Arithmetic in F_{3^4}: canonical modulus, index codec, inverses and orders.

use residue_runs::{make_field, Result};

fn main() -> Result<()> {
    let f = make_field(3, 4)?;
    println!("F_81 modulus (low to high): {:?}", f.modulus().coeffs());

    let x = f.generator();
    let a = f.add(&f.square(&x), &f.one());
    let inv = f.inv(&a)?;
    println!(
        "a = x^2 + 1 has index {}; a^-1 has index {}",
        f.index_of(&a),
        f.index_of(&inv)
    );
    assert_eq!(f.mul(&a, &inv), f.one());

    // a primitive element has order q - 1
    let primitive = f.elements().find(|e| f.order(e).ok() == Some(80)).unwrap();
    println!("first primitive element: index {}", f.index_of(&primitive));

    println!("{}", serde_json::to_string(&f.to_json()).unwrap());
    Ok(())
}
