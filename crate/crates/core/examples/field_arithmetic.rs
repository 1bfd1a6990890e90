//! Arithmetic in GF(2^3) and GF(3^2), and GF(16) viewed as a vector space
//! over GF(4).

use std::sync::Arc;

use subspace_lrc::gf::{ExtensionContext, FieldContext};

fn main() -> subspace_lrc::Result<()> {
    let f8 = FieldContext::new(2, 3)?;
    println!("{} with modulus {:?}", f8.descriptor(), f8.modulus());
    let g = f8.primitive();
    let powers: Vec<u32> = (0..7).map(|e| f8.pow(g, e)).collect();
    println!("powers of the primitive element {g}: {powers:?}");
    for a in f8.elements().skip(1) {
        let inv = f8.inv(a)?;
        println!("  {a} * {inv} = {}", f8.mul(a, inv));
    }

    let f9 = FieldContext::of_order(9)?;
    let (a, b) = (4, 7);
    println!(
        "{}: {a}+{b}={}  {a}-{b}={}  {a}*{b}={}  {a}/{b}={}",
        f9.descriptor(),
        f9.add(a, b),
        f9.sub(a, b),
        f9.mul(a, b),
        f9.div(a, b)?
    );

    let gf4 = Arc::new(FieldContext::of_order(4)?);
    let ext = ExtensionContext::new(gf4, 2)?;
    let x = ext.big().primitive();
    let coords = ext.expand(x);
    println!(
        "{} over GF(4): primitive element {x} has coordinates {coords:?}, recombined {}",
        ext.big().descriptor(),
        ext.recombine(&coords)?
    );
    println!("frobenius x -> x^4 sends {x} to {}", ext.frobenius(x, 1));
    Ok(())
}
