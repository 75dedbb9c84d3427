//! Certification of explicit (co)homology bases, one bidegree at a time.
//!
//! A claimed list of representatives at a bidegree is certified when every
//! representative is a (co)cycle, the list has exactly `dim H` elements, and
//! it stays independent after adjoining the image of the incoming map.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::koszul::{BidegreeComplex, GeneratorSymbol, Theory};
use crate::linalg::Matrix;
use crate::pbw::{AlgebraElement, Bidegree, CaseSpec, DownUp, Family, Monomial};
use crate::series::Window;

use super::{active_bidegrees, VerifyError};

/// A claimed representative `Σ symbol ⊗ element`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub label: String,
    pub bidegree: Bidegree,
    pub parts: Vec<(GeneratorSymbol, AlgebraElement)>,
}

impl Claim {
    fn single(label: String, symbol: GeneratorSymbol, x: AlgebraElement) -> Self {
        let b = x.bidegree().expect("claims are nonzero and homogeneous");
        let g = symbol.bidegree();
        Claim {
            label,
            bidegree: b.shift(g.deg, g.sdeg),
            parts: vec![(symbol, x)],
        }
    }

    fn pair(
        label: String,
        p: (GeneratorSymbol, AlgebraElement),
        q: (GeneratorSymbol, AlgebraElement),
    ) -> Self {
        let mut c = Self::single(label, p.0, p.1);
        debug_assert_eq!(
            Self::single(String::new(), q.0, q.1.clone()).bidegree,
            c.bidegree
        );
        c.parts.push(q);
        c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    Certified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub theory: Theory,
    pub index: usize,
    pub bidegree: Bidegree,
    pub representatives: Vec<String>,
    pub claimed: usize,
    pub computed: usize,
    pub cycles: bool,
    pub image_rank: usize,
    pub combined_rank: usize,
    /// Preimage witnessing membership in the image, for membership claims.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<Vec<String>>,
    pub status: CertificateStatus,
    pub detail: String,
}

fn status(ok: bool) -> CertificateStatus {
    if ok {
        CertificateStatus::Certified
    } else {
        CertificateStatus::Failed
    }
}

fn claim_vectors(
    a: &DownUp,
    c: &BidegreeComplex,
    i: usize,
    claims: &[Claim],
) -> Result<Vec<Vec<crate::exactfield::FieldElement>>, String> {
    claims
        .iter()
        .map(|cl| {
            c.spaces[i]
                .coordinates(a, &cl.parts)
                .map_err(|bad| format!("{}: term {bad} outside C_{i}", cl.label))
        })
        .collect()
}

/// Certifies that `claims` is a basis of `H_i` (or `H^i`) at `b`.
pub fn certify_basis_at(
    a: &DownUp,
    theory: Theory,
    i: usize,
    b: Bidegree,
    claims: &[Claim],
    name: &str,
) -> Result<Certificate, VerifyError> {
    let c = BidegreeComplex::build(theory, a, b)?;
    let representatives = claims.iter().map(|c| c.label.clone()).collect();
    let (outgoing, incoming) = (c.outgoing(i), c.incoming(i));
    let image_rank = incoming.rank();
    let computed = outgoing.nullity() - image_rank;
    let mut cert = Certificate {
        claim: name.to_string(),
        theory,
        index: i,
        bidegree: b,
        representatives,
        claimed: claims.len(),
        computed,
        cycles: false,
        image_rank,
        combined_rank: image_rank,
        solution: None,
        status: CertificateStatus::Failed,
        detail: String::new(),
    };
    let vectors = match claim_vectors(a, &c, i, claims) {
        Ok(v) => v,
        Err(e) => {
            cert.detail = e;
            return Ok(cert);
        }
    };
    cert.cycles = vectors
        .iter()
        .map(|v| outgoing.mul_vec(v))
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .all(|w| w.iter().all(|x| x.is_zero()));
    let reps = Matrix::from_columns(a.field(), c.spaces[i].dim(), &vectors);
    cert.combined_rank = incoming.hstack(&reps)?.rank();
    let independent = cert.combined_rank == image_rank + claims.len();
    let counted = claims.len() == computed;
    cert.status = status(cert.cycles && independent && counted);
    cert.detail = match (cert.cycles, independent, counted) {
        (true, true, true) => "cycles, independent modulo image, count matches".into(),
        (false, _, _) => "a representative is not a cycle".into(),
        (_, false, _) => "representatives dependent modulo image".into(),
        _ => format!(
            "claimed {} classes, homology has dimension {computed}",
            claims.len()
        ),
    };
    Ok(cert)
}

/// Certifies that `claim` is a boundary, with an explicit preimage.
pub fn certify_boundary_at(
    a: &DownUp,
    theory: Theory,
    i: usize,
    claim: &Claim,
    name: &str,
) -> Result<Certificate, VerifyError> {
    let c = BidegreeComplex::build(theory, a, claim.bidegree)?;
    let incoming = c.incoming(i);
    let mut cert = Certificate {
        claim: name.to_string(),
        theory,
        index: i,
        bidegree: claim.bidegree,
        representatives: vec![claim.label.clone()],
        claimed: 1,
        computed: 0,
        cycles: true,
        image_rank: incoming.rank(),
        combined_rank: 0,
        solution: None,
        status: CertificateStatus::Failed,
        detail: String::new(),
    };
    let v = match claim_vectors(a, &c, i, std::slice::from_ref(claim)) {
        Ok(mut v) => v.remove(0),
        Err(e) => {
            cert.detail = e;
            return Ok(cert);
        }
    };
    cert.combined_rank = incoming
        .hstack(&Matrix::from_columns(
            a.field(),
            v.len(),
            std::slice::from_ref(&v),
        ))?
        .rank();
    match incoming.solve(&v)? {
        Some(x) if incoming.mul_vec(&x)? == v => {
            cert.solution = Some(x.iter().map(ToString::to_string).collect());
            cert.status = CertificateStatus::Certified;
            cert.detail = "lies in the image of the incoming differential".into();
        }
        _ => cert.detail = "not in the image of the incoming differential".into(),
    }
    Ok(cert)
}

fn divides(n: u32, x: i64) -> bool {
    if n == 0 {
        x == 0
    } else {
        x.rem_euclid(n as i64) == 0
    }
}

fn hh0_member(family: Family, m: Monomial) -> bool {
    let (i, j, k) = (m.i as i64, m.j as i64, m.k as i64);
    match family {
        Family::F1 => [i, j, k].iter().filter(|&&x| x > 0).count() <= 1,
        Family::F2Root { n: 1 } => j == 0,
        Family::F2Root { n: 2 } => {
            (j == 0 && i % 2 == 0 && k % 2 == 0)
                || (j == 0 && k == 0 && i % 2 == 1)
                || (j == 0 && i == 0 && k % 2 == 1)
                || (i == 0 && k == 0 && j % 2 == 1)
        }
        _ => {
            let n = family.n();
            (divides(n, j - i) && divides(n, j - k))
                || (j == 0 && k == 0 && !divides(n, i))
                || (j == 0 && i == 0 && !divides(n, k))
                || (i == 0 && k == 0 && j % 2 == 1 && (n.is_multiple_of(2) || j <= n as i64 - 2))
        }
    }
}

fn group(claims: Vec<Claim>) -> BTreeMap<Bidegree, Vec<Claim>> {
    let mut out: BTreeMap<Bidegree, Vec<Claim>> = BTreeMap::new();
    for c in claims {
        out.entry(c.bidegree).or_default().push(c);
    }
    out
}

/// The claimed `HH_0` representatives of usual degree inside `window`.
pub fn hh0_claims(case: &CaseSpec, window: Window) -> Vec<Claim> {
    let a = case.algebra();
    let mut out = Vec::new();
    for deg in window.degrees().filter(|d| *d >= 0) {
        for j in 0..=deg / 2 {
            for i in 0..=deg - 2 * j {
                let m = Monomial::new(i as u32, j as u32, (deg - 2 * j - i) as u32);
                if hh0_member(case.family(), m) {
                    out.push(Claim::single(
                        m.to_string(),
                        GeneratorSymbol::AUnit,
                        AlgebraElement::monomial(a.field(), m),
                    ));
                }
            }
        }
    }
    out
}

/// The claimed `HH_3` representatives `x | d²u²` of usual degree inside `window`.
pub fn hh3_claims(case: &CaseSpec, window: Window) -> Vec<Claim> {
    hh3_claims_with_step(case, window, 2)
}

/// The non-root family with every power `w1^i w2^i`, which is what the kernel
/// of `d3` actually contains (one class at each bidegree `(4k + 4, 0)`).
pub fn amended_hh3_claims(case: &CaseSpec, window: Window) -> Vec<Claim> {
    match case.family() {
        Family::F2NonRoot => hh3_claims_with_step(case, window, 1),
        _ => Vec::new(),
    }
}

fn hh3_claims_with_step(case: &CaseSpec, window: Window, nonroot_step: usize) -> Vec<Claim> {
    let a = case.algebra();
    let top = window.hi - 4;
    let mut out = Vec::new();
    let mut push = |label: String, factors: [(AlgebraElement, u32); 4]| {
        let powers: Vec<AlgebraElement> = factors.iter().map(|(x, e)| a.pow(x, *e)).collect();
        let x = a.mul_all(&powers.iter().collect::<Vec<_>>());
        let claim = Claim::single(format!("{label}|d²u²"), GeneratorSymbol::Omega, x);
        if window.contains(claim.bidegree.deg) {
            out.push(claim);
        }
    };
    let (w1, w2, u, d) = (a.w1(), a.w2(), a.u(), a.d());
    match case.family() {
        Family::F1 => {}
        Family::F2NonRoot => {
            for e in (0..).step_by(nonroot_step).take_while(|e| 4 * e <= top) {
                let e = e as u32;
                push(
                    format!("w1^{e} w2^{e}"),
                    [
                        (w1.clone(), e),
                        (w2.clone(), e),
                        (u.clone(), 0),
                        (d.clone(), 0),
                    ],
                );
            }
        }
        Family::F2Root { n } if n <= 2 => {
            let step = if n == 2 { 2 } else { 1 };
            for e in (0..).step_by(step).take_while(|e| 2 * e <= top) {
                push(
                    format!("w1^{e}"),
                    [
                        (w1.clone(), e as u32),
                        (w2.clone(), 0),
                        (u.clone(), 0),
                        (d.clone(), 0),
                    ],
                );
            }
        }
        Family::F2Root { n } => {
            let n = n as i64;
            for i in 0..=top / 2 {
                for j in 0..=(top - 2 * i) / 2 {
                    if (i - j) % n != 0 {
                        continue;
                    }
                    let rest = top - 2 * i - 2 * j;
                    let mut shapes = vec![(0, 0)];
                    shapes.extend(
                        (1..)
                            .take_while(|k| n * k <= rest)
                            .flat_map(|k| [(k, 0), (0, k)]),
                    );
                    for (k, l) in shapes {
                        push(
                            format!("w1^{i} w2^{j} u^{} d^{}", n * k, n * l),
                            [
                                (w1.clone(), i as u32),
                                (w2.clone(), j as u32),
                                (u.clone(), (n * k) as u32),
                                (d.clone(), (n * l) as u32),
                            ],
                        );
                    }
                }
            }
        }
    }
    out
}

fn certify_all(
    a: &DownUp,
    theory: Theory,
    i: usize,
    window: Window,
    claims: Vec<Claim>,
    name: &str,
) -> Result<Vec<Certificate>, VerifyError> {
    let grouped = group(claims);
    let mut bidegrees = active_bidegrees(theory, window);
    // claims landing at bidegrees without any chains are failures, not skipped
    bidegrees.extend(grouped.keys().filter(|b| window.contains(b.deg)).copied());
    bidegrees.sort();
    bidegrees.dedup();
    bidegrees
        .into_par_iter()
        .map(|b| {
            certify_basis_at(
                a,
                theory,
                i,
                b,
                grouped.get(&b).map_or(&[][..], Vec::as_slice),
                name,
            )
        })
        .collect()
}

pub fn certify_hh0_basis(case: &CaseSpec, window: Window) -> Result<Vec<Certificate>, VerifyError> {
    certify_all(
        case.algebra(),
        Theory::Homology,
        0,
        window,
        hh0_claims(case, window),
        "HH_0 basis",
    )
}

pub fn certify_hh3_basis(case: &CaseSpec, window: Window) -> Result<Vec<Certificate>, VerifyError> {
    certify_all(
        case.algebra(),
        Theory::Homology,
        3,
        window,
        hh3_claims(case, window),
        "HH_3 basis",
    )
}

/// Certifies [`amended_hh3_claims`]; empty outside the non-root family.
pub fn certify_amended_hh3_basis(
    case: &CaseSpec,
    window: Window,
) -> Result<Vec<Certificate>, VerifyError> {
    if case.family() != Family::F2NonRoot {
        return Ok(Vec::new());
    }
    certify_all(
        case.algebra(),
        Theory::Homology,
        3,
        window,
        amended_hh3_claims(case, window),
        "HH_3 basis, amended",
    )
}

/// Certifies the explicit bases of `HH^0..HH^3` for the generic family.
pub fn certify_cohomology_bases(
    case: &CaseSpec,
    window: Window,
) -> Result<Vec<Certificate>, VerifyError> {
    if case.family() != Family::F1 {
        return Err(VerifyError::Unsupported(format!(
            "explicit cohomology bases are stated for F1, not {}",
            case.family()
        )));
    }
    use GeneratorSymbol::*;
    let a = case.algebra();
    let m = |i, j, k| a.mono(i, j, k);
    let top = (window.hi + 4).max(0) as u32;

    let hh0 = vec![Claim::single("1".into(), AUnit, a.one())];
    let hh1 = vec![
        Claim::single("U|u".into(), VStarU, a.u()),
        Claim::single("D|d".into(), VStarD, a.d()),
    ];
    let mut hh2 = vec![Claim::pair(
        "D²U|ud² + DU²|u²d".into(),
        (RStarD2U, m(1, 0, 2)),
        (RStarDU2, m(2, 0, 1)),
    )];
    for k in (0..).take_while(|k| 2 * k <= top) {
        hh2.push(Claim::pair(
            format!("D²U|w^{k} d + DU²|u w^{k}"),
            (RStarD2U, m(0, k, 1)),
            (RStarDU2, m(1, k, 0)),
        ));
    }
    let mut hh3 = vec![Claim::single("D²U²|u w d".into(), OmegaStar, m(1, 1, 1))];
    for j in (0..).take_while(|j| 2 * j <= top).filter(|&j| j != 2) {
        hh3.push(Claim::single(format!("D²U²|w^{j}"), OmegaStar, m(0, j, 0)));
    }

    let mut out = Vec::new();
    for (i, claims, name) in [
        (0, hh0, "HH^0 basis"),
        (1, hh1, "HH^1 basis"),
        (2, hh2, "HH^2 basis"),
        (3, hh3, "HH^3 basis"),
    ] {
        out.extend(certify_all(a, Theory::Cohomology, i, window, claims, name)?);
    }
    let excluded = Claim::single("D²U²|w^2".into(), OmegaStar, m(0, 2, 0));
    if window.contains(excluded.bidegree.deg) {
        out.push(certify_boundary_at(
            a,
            Theory::Cohomology,
            3,
            &excluded,
            "HH^3 excluded class is a boundary",
        )?);
    }
    Ok(out)
}
