//! Hochschild cohomology of the generic family, per bidegree.

use duha::cli::resolve_preset;
use duha::koszul::Theory;
use duha::pbw::Bidegree;
use duha::series::Window;
use duha::verify::{compute_hh_dims, verify_against_catalog};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let case = resolve_preset("f1-rational")?;
    let w = Window::new(-6, 4);
    let table = compute_hh_dims(&case, Theory::Cohomology, w)?;
    for i in 0..4 {
        println!("HH^{i}: {}", table.totals(i));
    }
    println!("HH^2 at (-2,0): {}", table.dim(2, Bidegree::new(-2, 0)));
    println!(
        "closed forms match: {}",
        verify_against_catalog(&case, Theory::Cohomology, w)?.passed()
    );
    Ok(())
}
