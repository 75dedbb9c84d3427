//! One PASS/FAIL line per acceptance criterion, all checks exact.
//!
//! Criteria 3, 4 and 9 are stated against closed forms that disagree with the
//! computed dimensions. They print FAIL, and the run still succeeds if the
//! whole disagreement is accounted for by the amended series and bases. Any
//! other failure, or one of those three unexpectedly passing, makes the run
//! exit nonzero.

use std::process::ExitCode;
use std::time::Instant;

use duha::cli::{resolve_preset, PRESETS};
use duha::koszul::{BidegreeComplex, Theory};
use duha::pbw::{CaseSpec, DownUp, Family, Monomial};
use duha::series::{
    amended_homology, catalog_homology, euler_char_of_hilbert, minus_t_over_one_minus_t,
    one_minus_t_pow, s1, totient_log_sum, LaurentSeries, RationalFunction, Window,
};
use duha::verify::{
    active_bidegrees, certify_amended_hh3_basis, certify_cohomology_bases, certify_hh0_basis,
    certify_hh3_basis, compute_hh_dims, verify_against_catalog, verify_algebra_dims,
    verify_cy_duality, verify_cyclic, Certificate, CertificateStatus, DimensionTable,
    DEFAULT_COHOMOLOGY_WINDOW, DEFAULT_HOMOLOGY_WINDOW,
};
use duha::wordoracle::{to_pbw_element, Letter, Rewriter, Strategy, Word, WordCombination};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Res<T> = Result<T, Box<dyn std::error::Error>>;
type Criterion = fn() -> Res<Verdict>;

struct Verdict {
    pass: bool,
    detail: String,
    /// For known-red criteria: whether the amended forms account for every
    /// mismatch.
    explained: Option<bool>,
}

impl Verdict {
    fn plain(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
            explained: None,
        }
    }
}

const KNOWN_RED: [u32; 3] = [3, 4, 9];
const H: Window = DEFAULT_HOMOLOGY_WINDOW;

fn preset(name: &str) -> CaseSpec {
    resolve_preset(name).unwrap_or_else(|e| panic!("preset {name}: {e}"))
}

fn presets() -> Vec<CaseSpec> {
    PRESETS.iter().map(|p| preset(p)).collect()
}

fn ints(s: &LaurentSeries) -> Vec<i64> {
    s.iter()
        .map(|(d, _)| {
            s.integer_coeff(d)
                .ok()
                .flatten()
                .expect("integer coefficient")
        })
        .collect()
}

/// Degrees where a computed total differs from a series.
fn mismatches(table: &DimensionTable, i: usize, series: &LaurentSeries) -> Vec<String> {
    let computed = ints(&table.totals(i));
    let expected = ints(series);
    table
        .window
        .degrees()
        .zip(computed.iter().zip(&expected))
        .filter(|(_, (c, e))| c != e)
        .map(|(d, (c, e))| format!("deg {d}: {c}≠{e}"))
        .collect()
}

fn c1_algebra_dims() -> Res<Verdict> {
    let start = Instant::now();
    let mut fails = Vec::new();
    for case in presets() {
        let r = verify_algebra_dims(&case, Window::new(0, 16))?;
        fails.extend(
            r.failures()
                .into_iter()
                .map(|f| format!("{}: {f}", case.name())),
        );
    }
    let first: Vec<usize> = (0..=10).map(duha::pbw::dim_total).collect();
    if first != [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36] {
        fails.push(format!("dims {first:?}"));
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 5.0 {
        fails.push(format!("took {secs:.1}s"));
    }
    Ok(Verdict::plain(
        fails.is_empty(),
        format!(
            "dim A on [0,16] and the bigraded recurrence, 7 presets, {secs:.2}s {}",
            fails.join("; ")
        ),
    ))
}

fn c2_f1_homology() -> Res<Verdict> {
    let start = Instant::now();
    let case = preset("f1-rational");
    let report = verify_against_catalog(&case, Theory::Homology, H)?;
    let table = compute_hh_dims(&case, Theory::Homology, H)?;
    let nonzero_top = table.rows.iter().filter(|r| r.i >= 2 && r.dim != 0).count();
    let secs = start.elapsed().as_secs_f64();
    let pass = report.passed() && nonzero_top == 0 && secs < 60.0;
    Ok(Verdict::plain(
        pass,
        format!(
            "F1 HH_0..HH_3 on [0,12]: {} comparisons, {} failures, {nonzero_top} nonzero HH_2/HH_3 bidegrees, {secs:.2}s",
            report.comparisons.len(),
            report.failures().len()
        ),
    ))
}

fn c3_nonroot() -> Res<Verdict> {
    let case = preset("f2-generic");
    let table = compute_hh_dims(&case, Theory::Homology, H)?;
    let support = |i| -> Vec<(i64, i64)> {
        let t = ints(&table.totals(i));
        H.degrees().zip(t).filter(|(_, v)| *v != 0).collect()
    };
    let hh3 = support(3);
    let hh2 = support(2);
    let mut issues = Vec::new();
    if hh3 != [(4, 1), (12, 1)] {
        issues.push(format!("HH_3 support {hh3:?}, expected [(4, 1), (12, 1)]"));
    }
    if hh2 != [(4, 2), (12, 2)] {
        issues.push(format!("HH_2 support {hh2:?}, expected [(4, 2), (12, 2)]"));
    }
    let mut amended_bad = Vec::new();
    for i in 0..4 {
        let printed = mismatches(&table, i, &catalog_homology(case.family(), i, H)?);
        if !printed.is_empty() {
            issues.push(format!("HH_{i} vs printed: {}", printed.join(", ")));
        }
        amended_bad.extend(mismatches(
            &table,
            i,
            &amended_homology(case.family(), i, H)?,
        ));
    }
    let explained = amended_bad.is_empty();
    Ok(Verdict {
        pass: issues.is_empty(),
        detail: format!(
            "F2 non-root on [0,12]: {}; amended HH_3 = t^4/(1-t^4) {}",
            if issues.is_empty() {
                "matches".into()
            } else {
                issues.join("; ")
            },
            if explained {
                "matches every degree"
            } else {
                "also fails"
            }
        ),
        explained: Some(explained),
    })
}

fn c4_roots() -> Res<Verdict> {
    let mut issues = Vec::new();
    let mut amended_bad = Vec::new();
    for name in ["f2-root-3", "f2-root-4"] {
        let case = preset(name);
        let table = compute_hh_dims(&case, Theory::Homology, H)?;
        for i in 0..4 {
            let printed = mismatches(&table, i, &catalog_homology(case.family(), i, H)?);
            if !printed.is_empty() {
                issues.push(format!("{name} HH_{i}: {}", printed.join(", ")));
            }
            amended_bad.extend(mismatches(
                &table,
                i,
                &amended_homology(case.family(), i, H)?,
            ));
        }
        if name == "f2-root-4" {
            let hh0 = ints(&table.totals(0));
            if (hh0[4], hh0[8]) != (3, 6) {
                issues.push(format!(
                    "n=4 spot values HH_0 deg 4, 8 = ({}, {}), expected (3, 6)",
                    hh0[4], hh0[8]
                ));
            }
        }
    }
    let explained = amended_bad.is_empty();
    Ok(Verdict {
        pass: issues.is_empty(),
        detail: format!(
            "n=3, n=4 on [0,12]: {}; amended series with f_n·(1+t^(2n)) {}",
            if issues.is_empty() {
                "match".into()
            } else {
                issues.join("; ")
            },
            if explained {
                "match every degree"
            } else {
                "also fail"
            }
        ),
        explained: Some(explained),
    })
}

fn c5_small_roots() -> Res<Verdict> {
    let mut lines = Vec::new();
    let mut ok = true;
    for name in ["f2-root-1", "f2-root-2"] {
        let case = preset(name);
        let report = verify_against_catalog(&case, Theory::Homology, H)?;
        let erratum_notes = report
            .notes
            .iter()
            .filter(|n| n.starts_with("erratum check"))
            .count();
        ok &= erratum_notes == 4 && report.comparisons.len() == 4 * 13;
        let table = compute_hh_dims(&case, Theory::Homology, H)?;
        for i in 0..4 {
            let printed = ints(&catalog_homology(case.family(), i, H)?);
            lines.push(format!(
                "    {name} HH_{i} computed {:?} printed {:?}",
                ints(&table.totals(i)),
                printed
            ));
        }
        lines.push(format!(
            "    {name}: {} of {} comparisons match, {erratum_notes} erratum notes",
            report.comparisons.iter().filter(|c| c.matches).count(),
            report.comparisons.len()
        ));
        for note in report
            .notes
            .iter()
            .filter(|n| n.starts_with("erratum check"))
        {
            lines.push(format!("    {name}: {note}"));
        }
    }
    Ok(Verdict::plain(
        ok,
        format!(
            "n=1, n=2 tables and printed-label notes emitted\n{}",
            lines.join("\n")
        ),
    ))
}

fn c6_complexes() -> Res<Verdict> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for case in presets() {
        for (theory, w) in [
            (Theory::Homology, H),
            (Theory::Cohomology, DEFAULT_COHOMOLOGY_WINDOW),
        ] {
            for b in active_bidegrees(theory, w) {
                let cx = BidegreeComplex::build(theory, case.algebra(), b)?;
                checked += 1;
                if !cx.squares_to_zero()? {
                    bad.push(format!("{} {theory:?} {b}", case.name()));
                }
            }
        }
    }
    Ok(Verdict::plain(
        bad.is_empty(),
        format!("d∘d = 0 at {checked} complexes {}", bad.join(", ")),
    ))
}

fn c7_goodwillie() -> Res<Verdict> {
    let mut bad = Vec::new();
    let mut n = 0;
    for case in presets() {
        let r = verify_cyclic(&case, H)?;
        for c in r
            .comparisons
            .iter()
            .filter(|c| c.quantity.contains("via Connes"))
        {
            n += 1;
            if !c.matches {
                bad.push(format!("{}: {c}", case.name()));
            }
        }
    }
    Ok(Verdict::plain(
        bad.is_empty(),
        format!(
            "HH_1, HH_2 from HH̄_0 and HH_3: {n} degree checks {}",
            bad.join("; ")
        ),
    ))
}

fn c8_igusa() -> Res<Verdict> {
    let w = Window::new(0, 12);
    let den = &(&one_minus_t_pow(2) * &one_minus_t_pow(1)) * &one_minus_t_pow(1);
    let hilbert = RationalFunction::new(duha::exactfield::Poly::one(), den, 0)?.expand(w);
    let chi = euler_char_of_hilbert(&hilbert, 12)?;
    let target = s1(w);
    let euler_ok = chi == target;
    let log_ok = totient_log_sum(12) == minus_t_over_one_minus_t(12);
    Ok(Verdict::plain(
        euler_ok && log_ok,
        format!("Σ φ(ℓ)/ℓ log A(t^ℓ) = t(2+3t)/(1-t²): {euler_ok}; Σ φ(ℓ)/ℓ log(1-t^ℓ) = -t/(1-t): {log_ok}"),
    ))
}

fn c9_certificates() -> Res<Verdict> {
    let mut all: Vec<(String, Certificate)> = Vec::new();
    let mut amended: Vec<Certificate> = Vec::new();
    for case in presets() {
        let tag = |c: Certificate| (case.name().to_string(), c);
        all.extend(certify_hh0_basis(&case, H)?.into_iter().map(tag));
        all.extend(certify_hh3_basis(&case, H)?.into_iter().map(tag));
        if case.family() == Family::F1 {
            all.extend(
                certify_cohomology_bases(&case, DEFAULT_COHOMOLOGY_WINDOW)?
                    .into_iter()
                    .map(tag),
            );
        }
        amended.extend(certify_amended_hh3_basis(&case, H)?);
    }
    let failed: Vec<&(String, Certificate)> = all
        .iter()
        .filter(|(_, c)| c.status != CertificateStatus::Certified)
        .collect();
    // every failure must be a printed non-root HH_3 claim, and the amended
    // basis must certify everywhere
    let explained = failed
        .iter()
        .all(|(name, c)| name == "f2-generic" && c.claim == "HH_3 basis")
        && !amended.is_empty()
        && amended
            .iter()
            .all(|c| c.status == CertificateStatus::Certified);
    let listing: Vec<String> = failed
        .iter()
        .map(|(n, c)| format!("{n} {} at {}: {}", c.claim, c.bidegree, c.detail))
        .collect();
    Ok(Verdict {
        pass: failed.is_empty(),
        detail: format!(
            "{} certificates, {} failed {}; amended non-root HH_3 basis: {} of {} certified",
            all.len(),
            failed.len(),
            listing.join("; "),
            amended
                .iter()
                .filter(|c| c.status == CertificateStatus::Certified)
                .count(),
            amended.len()
        ),
        explained: Some(explained),
    })
}

fn c10_duality() -> Res<Verdict> {
    let mut bad = Vec::new();
    let mut n = 0;
    for case in presets().into_iter().filter(|c| c.family().is_f2()) {
        let r = verify_cy_duality(&case, Window::new(-6, 8))?;
        n += r.comparisons.len();
        bad.extend(
            r.failures()
                .into_iter()
                .map(|f| format!("{}: {f}", case.name())),
        );
    }
    Ok(Verdict::plain(
        bad.is_empty(),
        format!(
            "HH^i(s) = HH_(3-i)(s+4) on [-6,8], 6 presets, {n} checks {}",
            bad.join("; ")
        ),
    ))
}

fn random_monomial(rng: &mut ChaCha8Rng) -> Monomial {
    Monomial::new(
        rng.gen_range(0..=3),
        rng.gen_range(0..=2),
        rng.gen_range(0..=3),
    )
}

fn oracle_product(
    a: &DownUp,
    rw: &Rewriter,
    x: Monomial,
    y: Monomial,
) -> duha::pbw::AlgebraElement {
    let words = a.word_expansion(x).concat(&a.word_expansion(y));
    to_pbw_element(&rw.reduce_combination(&words), a)
}

fn random_word(rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(0..=9);
    Word::from_letters(
        (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::U
                } else {
                    Letter::D
                }
            })
            .collect(),
    )
}

fn c11_oracle() -> Res<Verdict> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d0b0);
    let cases = presets();
    let mut bad = Vec::new();
    for n in 0..500 {
        let case = &cases[n % cases.len()];
        let a = case.algebra();
        let rw = Rewriter::for_algebra(a);
        let (x, y) = (random_monomial(&mut rng), random_monomial(&mut rng));
        if a.mono_product(x, y) != oracle_product(a, &rw, x, y) {
            bad.push(format!("{}: {x} · {y}", case.name()));
        }
    }
    for n in 0..500 {
        let case = &cases[n % cases.len()];
        let rw = Rewriter::for_algebra(case.algebra());
        let w = random_word(&mut rng);
        let left: WordCombination = rw.clone().with_strategy(Strategy::Leftmost).reduce_word(&w);
        let right = rw.with_strategy(Strategy::Rightmost).reduce_word(&w);
        if left != right || !left.is_normal() {
            bad.push(format!("{}: word {w}", case.name()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 30.0 {
        bad.push(format!("took {secs:.1}s"));
    }
    Ok(Verdict::plain(
        bad.is_empty(),
        format!("500 products and 500 words, {secs:.2}s {}", bad.join("; ")),
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, Criterion); 11] = [
        (1, c1_algebra_dims),
        (2, c2_f1_homology),
        (3, c3_nonroot),
        (4, c4_roots),
        (5, c5_small_roots),
        (6, c6_complexes),
        (7, c7_goodwillie),
        (8, c8_igusa),
        (9, c9_certificates),
        (10, c10_duality),
        (11, c11_oracle),
    ];
    let mut unexpected = Vec::new();
    for (n, run) in criteria {
        let known_red = KNOWN_RED.contains(&n);
        match run() {
            Ok(v) => {
                println!(
                    "{} criterion {n}: {}",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.detail.trim_end()
                );
                let fine = if known_red {
                    !v.pass && v.explained == Some(true)
                } else {
                    v.pass
                };
                if !fine {
                    unexpected.push(n);
                }
                if known_red && !v.pass {
                    println!("    known deviation from the printed closed form; amended forms account for it: {}", v.explained == Some(true));
                }
            }
            Err(e) => {
                println!("FAIL criterion {n}: error: {e}");
                unexpected.push(n);
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected (known deviations: 3, 4, 9)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
