//! HH^i against HH_{3-i} shifted by 4 when β = -1.

use duha::cli::resolve_preset;
use duha::series::Window;
use duha::verify::verify_cy_duality;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["f2-generic", "f2-root-6"] {
        let case = resolve_preset(name)?;
        let report = verify_cy_duality(&case, Window::new(-6, 6))?;
        println!(
            "{name}: {} comparisons, dual: {}",
            report.comparisons.len(),
            report.passed()
        );
    }
    Ok(())
}
