//! Certifying explicit bases: cycles, independent modulo boundaries, full count.

use duha::cli::resolve_preset;
use duha::series::Window;
use duha::verify::{certify_cohomology_bases, certify_hh3_basis, CertificateStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let case = resolve_preset("f2-root-3")?;
    let certs = certify_hh3_basis(&case, Window::new(0, 10))?;
    for c in certs.iter().filter(|c| c.claimed > 0) {
        println!(
            "{} at {}: {:?} {}",
            c.claim, c.bidegree, c.representatives, c.detail
        );
    }
    let f1 = resolve_preset("f1-rational")?;
    let co = certify_cohomology_bases(&f1, Window::new(-6, 4))?;
    let ok = co
        .iter()
        .filter(|c| c.status == CertificateStatus::Certified)
        .count();
    println!("F1 cohomology: {ok} of {} certificates hold", co.len());
    Ok(())
}
