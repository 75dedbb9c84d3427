//! End-to-end checks: dimension tables computed by linear algebra, compared
//! with closed forms, with each other, and with explicit bases.

mod certify;
mod checks;

pub use certify::{
    amended_hh3_claims, certify_amended_hh3_basis, certify_cohomology_bases, certify_hh0_basis,
    certify_hh3_basis, hh0_claims, hh3_claims, Certificate, CertificateStatus, Claim,
};
pub use checks::{
    alternate_reading, verify_against_catalog, verify_algebra_dims, verify_cy_duality,
    verify_cyclic, AlternateReading,
};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::koszul::{cohomology_spaces, homology_spaces, BidegreeComplex, KoszulError, Theory};
use crate::linalg::LinalgError;
use crate::pbw::{Bidegree, CaseError, CaseSpec, DownUp};
use crate::series::{LaurentSeries, SeriesError, Window};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error("differentials do not compose to zero at bidegree {0}")]
    NotAComplex(Bidegree),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("thread pool: {0}")]
    Pool(String),
}

impl VerifyError {
    /// Whether the error means the mathematics itself is inconsistent.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            VerifyError::NotAComplex(_)
                | VerifyError::Linalg(LinalgError::NegativeHomology { .. })
                | VerifyError::Koszul(KoszulError::Inhomogeneous { .. })
        )
    }
}

/// Serializable description of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseSummary {
    pub name: String,
    pub family: String,
    pub minpoly: String,
    pub r1: String,
    pub r2: String,
    pub alpha: String,
    pub beta: String,
}

impl CaseSummary {
    pub fn of(case: &CaseSpec) -> Self {
        Self::of_algebra(case.name(), &case.family().to_string(), case.algebra())
    }

    pub fn of_algebra(name: &str, family: &str, a: &DownUp) -> Self {
        CaseSummary {
            name: name.to_string(),
            family: family.to_string(),
            minpoly: a.field().modulus().to_string(),
            r1: a.r1().to_string(),
            r2: a.r2().to_string(),
            alpha: a.alpha().to_string(),
            beta: a.beta().to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DimensionRow {
    pub i: usize,
    pub deg: i64,
    pub sdeg: i64,
    pub dim: usize,
}

/// `dim HH_i` (or `HH^i`) at every bidegree of a window whose complex is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionTable {
    pub case: CaseSummary,
    pub theory: Theory,
    pub window: Window,
    pub rows: Vec<DimensionRow>,
}

impl DimensionTable {
    /// Dimension per usual degree, summed over special degrees.
    pub fn totals(&self, i: usize) -> LaurentSeries {
        let mut by_deg: BTreeMap<i64, i64> = BTreeMap::new();
        for r in self.rows.iter().filter(|r| r.i == i) {
            *by_deg.entry(r.deg).or_default() += r.dim as i64;
        }
        LaurentSeries::from_fn(self.window, |d| {
            crate::exactfield::Rational::from_integer(by_deg.get(&d).copied().unwrap_or(0).into())
        })
    }

    pub fn dim(&self, i: usize, b: Bidegree) -> usize {
        self.rows
            .binary_search_by(|r| (r.i, r.deg, r.sdeg).cmp(&(i, b.deg, b.sdeg)))
            .map_or(0, |p| self.rows[p].dim)
    }

    /// Bidegrees with a nonzero complex, in increasing order.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self
            .rows
            .iter()
            .filter(|r| r.i == 0)
            .map(|r| Bidegree::new(r.deg, r.sdeg))
            .collect();
        v.dedup();
        v
    }
}

/// Bidegrees in `window` at which the complex has a nonzero term.
pub fn active_bidegrees(theory: Theory, window: Window) -> Vec<Bidegree> {
    let mut out = Vec::new();
    for deg in window.degrees() {
        let reach = deg.abs() + 6;
        for sdeg in -reach..=reach {
            let b = Bidegree::new(deg, sdeg);
            let spaces = match theory {
                Theory::Homology => homology_spaces(b),
                Theory::Cohomology => cohomology_spaces(b),
            };
            if spaces.iter().any(|s| s.dim() > 0) {
                out.push(b);
            }
        }
    }
    out
}

/// Builds the complex at `b`, checks that it is a complex, returns its homology.
pub fn bidegree_dims(theory: Theory, a: &DownUp, b: Bidegree) -> Result<[usize; 4], VerifyError> {
    let c = BidegreeComplex::build(theory, a, b)?;
    if !c.squares_to_zero()? {
        return Err(VerifyError::NotAComplex(b));
    }
    Ok(c.dims()?)
}

/// Runs `f` on a pool of `jobs` threads (all available when `None`).
pub fn with_jobs<T: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, VerifyError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Homology or cohomology dimensions of an arbitrary algebra.
pub fn compute_dims_for(
    summary: CaseSummary,
    a: &DownUp,
    theory: Theory,
    window: Window,
) -> Result<DimensionTable, VerifyError> {
    let per_bidegree = active_bidegrees(theory, window)
        .into_par_iter()
        .map(|b| bidegree_dims(theory, a, b).map(|d| (b, d)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows: Vec<DimensionRow> = per_bidegree
        .into_iter()
        .flat_map(|(b, dims)| {
            dims.into_iter()
                .enumerate()
                .map(move |(i, dim)| DimensionRow {
                    i,
                    deg: b.deg,
                    sdeg: b.sdeg,
                    dim,
                })
        })
        .collect();
    rows.sort();
    Ok(DimensionTable {
        case: summary,
        theory,
        window,
        rows,
    })
}

pub fn compute_hh_dims(
    case: &CaseSpec,
    theory: Theory,
    window: Window,
) -> Result<DimensionTable, VerifyError> {
    compute_dims_for(CaseSummary::of(case), case.algebra(), theory, window)
}

pub const DEFAULT_HOMOLOGY_WINDOW: Window = Window { lo: 0, hi: 12 };
pub const DEFAULT_COHOMOLOGY_WINDOW: Window = Window { lo: -6, hi: 12 };

/// One computed-versus-predicted number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub degree: i64,
    pub computed: i64,
    pub predicted: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Comparison {
    pub fn new(quantity: impl Into<String>, degree: i64, computed: i64, predicted: i64) -> Self {
        Comparison {
            quantity: quantity.into(),
            degree,
            computed,
            predicted,
            matches: computed == predicted,
        }
    }
}

/// Compares two integer series degree by degree.
impl std::fmt::Display for Comparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} at degree {}: computed {}, predicted {}",
            self.quantity, self.degree, self.computed, self.predicted
        )
    }
}

pub fn compare_series(
    quantity: &str,
    computed: &LaurentSeries,
    predicted: &LaurentSeries,
) -> Result<Vec<Comparison>, VerifyError> {
    computed
        .window()
        .degrees()
        .map(|d| {
            Ok(Comparison::new(
                quantity,
                d,
                integer(computed, d)?,
                integer(predicted, d)?,
            ))
        })
        .collect()
}

pub(crate) fn integer(s: &LaurentSeries, d: i64) -> Result<i64, VerifyError> {
    s.integer_coeff(d)?.ok_or_else(|| {
        SeriesError::Domain(format!(
            "non-integer coefficient {} at degree {d}",
            s.coeff(d).unwrap()
        ))
        .into()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub case: CaseSummary,
    pub window: Window,
    pub comparisons: Vec<Comparison>,
    pub certificates: Vec<Certificate>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub series: BTreeMap<String, LaurentSeries>,
}

impl VerificationReport {
    pub fn new(case: CaseSummary, window: Window) -> Self {
        VerificationReport {
            case,
            window,
            comparisons: Vec::new(),
            certificates: Vec::new(),
            notes: Vec::new(),
            series: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.matches)
            && self
                .certificates
                .iter()
                .all(|c| c.status == CertificateStatus::Certified)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .comparisons
            .iter()
            .filter(|c| !c.matches)
            .map(Comparison::to_string)
            .collect();
        out.extend(
            self.certificates
                .iter()
                .filter(|c| c.status != CertificateStatus::Certified)
                .map(|c| format!("{} at {}: {}", c.claim, c.bidegree, c.detail)),
        );
        out
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.comparisons.extend(other.comparisons);
        self.certificates.extend(other.certificates);
        self.notes.extend(other.notes);
        self.series.extend(other.series);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Field, FieldSpec};

    fn case(r1: (i64, i64), r2: (i64, i64)) -> CaseSpec {
        let q = Field::rationals();
        let spec = FieldSpec::new(q.from_ratio(r1.0, r1.1), q.from_ratio(r2.0, r2.1)).unwrap();
        CaseSpec::classify("test", spec, 24).unwrap()
    }

    fn ints(s: &LaurentSeries) -> Vec<i64> {
        s.iter().map(|(d, _)| integer(s, d).unwrap()).collect()
    }

    #[test]
    fn generic_homology_small() {
        let t =
            compute_hh_dims(&case((2, 1), (3, 1)), Theory::Homology, Window::new(0, 8)).unwrap();
        assert_eq!(ints(&t.totals(0)), vec![1, 2, 3, 2, 3, 2, 3, 2, 3]);
        assert!(ints(&t.totals(2))
            .iter()
            .chain(&ints(&t.totals(3)))
            .all(|&x| x == 0));
        assert_eq!(t.dim(0, Bidegree::new(2, 0)), 1);
    }

    #[test]
    fn calabi_yau_top_class() {
        let t =
            compute_hh_dims(&case((2, 1), (1, 2)), Theory::Homology, Window::new(0, 6)).unwrap();
        let hh3: Vec<_> = t.rows.iter().filter(|r| r.i == 3 && r.dim > 0).collect();
        assert_eq!(hh3.len(), 1);
        assert_eq!((hh3[0].deg, hh3[0].sdeg, hh3[0].dim), (4, 0, 1));
    }

    #[test]
    fn generic_center() {
        let t = compute_hh_dims(
            &case((2, 1), (3, 1)),
            Theory::Cohomology,
            Window::new(-6, 4),
        )
        .unwrap();
        let hh0: Vec<_> = t.rows.iter().filter(|r| r.i == 0 && r.dim > 0).collect();
        assert_eq!(hh0.len(), 1);
        assert_eq!((hh0[0].deg, hh0[0].sdeg, hh0[0].dim), (0, 0, 1));
    }

    #[test]
    fn parallel_runs_agree() {
        let c = case((2, 1), (1, 2));
        let w = Window::new(0, 7);
        let one = with_jobs(Some(1), || compute_hh_dims(&c, Theory::Homology, w))
            .unwrap()
            .unwrap();
        let many = with_jobs(Some(4), || compute_hh_dims(&c, Theory::Homology, w))
            .unwrap()
            .unwrap();
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&many).unwrap()
        );
    }
}
