//! Hochschild homology dimensions per degree, against the closed forms.

use duha::cli::resolve_preset;
use duha::koszul::Theory;
use duha::series::Window;
use duha::verify::{compute_hh_dims, verify_against_catalog};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Window::new(0, 10);
    for name in ["f1-rational", "f2-root-1"] {
        let case = resolve_preset(name)?;
        let table = compute_hh_dims(&case, Theory::Homology, w)?;
        println!("{name} ({})", case.family());
        for i in 0..4 {
            println!("  HH_{i}: {}", table.totals(i));
        }
        let report = verify_against_catalog(&case, Theory::Homology, w)?;
        println!("  closed forms match: {}", report.passed());
    }
    Ok(())
}
