//! Reduced cyclic homology from HH_0 and HH_3, and the Euler characteristic.

use duha::cli::resolve_preset;
use duha::series::{igusa_chi, Window};
use duha::verify::verify_cyclic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Σ φ(ℓ)/ℓ log A(t^ℓ) = {}", igusa_chi(12));
    let case = resolve_preset("f2-root-4")?;
    let report = verify_cyclic(&case, Window::new(0, 12))?;
    for (name, s) in &report.series {
        println!("{name}: {s}");
    }
    println!("HH_1, HH_2 and χ consistent: {}", report.passed());
    Ok(())
}
