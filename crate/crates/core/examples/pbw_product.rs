//! Products in the normal-form basis u^i w^j d^k.

use duha::exactfield::{Field, FieldSpec};
use duha::pbw::DownUp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::rationals();
    let a = DownUp::new(FieldSpec::new(q.from_i64(2), q.from_i64(3))?);
    println!("α = {}, β = {}", a.alpha(), a.beta());
    let (u, d) = (a.u(), a.d());
    println!("d·u = {}", a.mul(&d, &u));
    println!("d²·u = {}", a.mul_all(&[&d, &d, &u]));
    println!(
        "(u w d)·(d u²) = {}",
        a.mul(&a.mono(1, 1, 1), &a.mul_all(&[&d, &u, &u]))
    );
    println!("σ(u² d) = {}", a.apply_sigma(&a.mono(2, 0, 1))?);
    Ok(())
}
