//! Arithmetic in ℚ(ζ₆) and root-of-unity orders.

use duha::exactfield::{cyclotomic, root_of_unity_order, Field};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = Field::new(cyclotomic(6))?;
    let z = k.generator();
    println!("minimal polynomial: {}", k.modulus());
    println!("ζ^2 = {}", z.pow(2));
    println!("ζ^3 = {}", z.pow(3));
    println!("1/(1 + ζ) = {}", (&k.one() + &z).inv()?);
    println!("order of ζ: {:?}", root_of_unity_order(&z, 64)?);
    println!("order of 2ζ: {:?}", root_of_unity_order(&(&z + &z), 64)?);
    Ok(())
}
