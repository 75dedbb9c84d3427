//! Exact coefficient arithmetic: rationals, simple number fields, cyclotomic
//! polynomials and the totient function.

mod field;
mod poly;

pub use field::{Field, FieldElement};
pub use poly::Poly;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("operands belong to different coefficient fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {modulus} is reducible: found common factor {factor}")]
    ReducibleModulus { modulus: String, factor: String },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("invalid field data: {0}")]
    InvalidSpec(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a dense coefficient list, lowest degree first: `"[6, -5, 1]"` or `"1/2,0,3"`.
pub fn parse_poly(s: &str) -> Result<Poly, FieldError> {
    let t = s.trim();
    let inner = match (t.strip_prefix('['), t.ends_with(']')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(FieldError::Parse(format!("unbalanced brackets in {t:?}"))),
    };
    if inner.trim().is_empty() {
        return Ok(Poly::zero());
    }
    let coeffs = inner
        .split(',')
        .map(|c| parse_rational(c.trim().trim_matches('"')))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(coeffs))
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient of zero");
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// The n-th cyclotomic polynomial, as `(t^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic(n: usize) -> Poly {
    assert!(n >= 1, "cyclotomic polynomial of order zero");
    let mut num = Poly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = num.div_rem(&cyclotomic(d));
        debug_assert!(r.is_zero());
        num = q;
    }
    num
}

/// Smallest `1 <= k <= bound` with `a^k = 1`.
pub fn root_of_unity_order(a: &FieldElement, bound: u64) -> Result<Option<u64>, FieldError> {
    if a.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    let mut p = a.clone();
    for k in 1..=bound {
        if p.is_one() {
            return Ok(Some(k));
        }
        p = &p * a;
    }
    Ok(None)
}

/// The coefficient field together with the two roots `r1`, `r2` of
/// `t^2 - αt - β`; α and β are derived by Vieta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    field: Field,
    r1: FieldElement,
    r2: FieldElement,
}

impl FieldSpec {
    pub fn new(r1: FieldElement, r2: FieldElement) -> Result<Self, FieldError> {
        if !r1.field().same_as(r2.field()) {
            return Err(FieldError::MixedFields);
        }
        if r1.is_zero() {
            return Err(FieldError::InvalidSpec("r1 must be nonzero".into()));
        }
        let spec = FieldSpec {
            field: r1.field().clone(),
            r1,
            r2,
        };
        let (alpha, beta) = (spec.alpha(), spec.beta());
        if alpha.is_zero() && beta.is_zero() {
            return Err(FieldError::InvalidSpec(
                "(alpha, beta) = (0, 0) is excluded".into(),
            ));
        }
        // r1, r2 must be roots of t^2 - αt - β; holds by construction, checked exactly.
        for r in [&spec.r1, &spec.r2] {
            let v = &(&(r * r) - &(&alpha * r)) - &beta;
            if !v.is_zero() {
                return Err(FieldError::InvalidSpec(format!("{r} is not a root")));
            }
        }
        Ok(spec)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn r1(&self) -> &FieldElement {
        &self.r1
    }

    pub fn r2(&self) -> &FieldElement {
        &self.r2
    }

    pub fn alpha(&self) -> FieldElement {
        &self.r1 + &self.r2
    }

    pub fn beta(&self) -> FieldElement {
        -(&self.r1 * &self.r2)
    }
}

/// `r1^i r2^j != 1` for all `0 <= i, j <= bound`, `(i, j) != (0, 0)`.
pub fn genericity_check(spec: &FieldSpec, bound: u64) -> bool {
    let mut p1 = spec.field().one();
    for i in 0..=bound {
        let mut p = p1.clone();
        for j in 0..=bound {
            if (i, j) != (0, 0) && p.is_one() {
                return false;
            }
            p = &p * spec.r2();
        }
        p1 = &p1 * spec.r1();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::One;

    fn brute_totient(n: u64) -> u64 {
        (1..=n).filter(|&k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(4), 2);
        assert_eq!(totient(6), 2);
        for n in 1..=200 {
            assert_eq!(totient(n), brute_totient(n), "n = {n}");
        }
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), Poly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), Poly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(4), Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic(3), Poly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), Poly::from_i64s(&[1, -1, 1]));
    }

    #[test]
    fn cyclotomic_degree_and_product() {
        for n in 1..=30usize {
            assert_eq!(cyclotomic(n).degree(), Some(totient(n as u64) as usize));
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(Poly::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, Poly::x_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn orders() {
        let q = Field::rationals();
        assert_eq!(root_of_unity_order(&q.from_i64(-1), 10).unwrap(), Some(2));
        assert_eq!(root_of_unity_order(&q.from_i64(2), 100).unwrap(), None);
        assert!(root_of_unity_order(&q.zero(), 10).is_err());
        let z3 = Field::new(Poly::from_i64s(&[1, 1, 1])).unwrap();
        assert_eq!(root_of_unity_order(&z3.generator(), 10).unwrap(), Some(3));
        for n in 3..=30usize {
            let f = Field::new(cyclotomic(n)).unwrap();
            assert_eq!(
                root_of_unity_order(&f.generator(), n as u64).unwrap(),
                Some(n as u64)
            );
        }
    }

    #[test]
    fn genericity() {
        let q = Field::rationals();
        let spec = |a: (i64, i64), b: (i64, i64)| {
            FieldSpec::new(q.from_ratio(a.0, a.1), q.from_ratio(b.0, b.1)).unwrap()
        };
        assert!(genericity_check(&spec((2, 1), (3, 1)), 20));
        assert!(!genericity_check(&spec((2, 1), (1, 2)), 20));
        assert!(!genericity_check(&spec((1, 1), (1, 1)), 20));
    }

    #[test]
    fn spec_rejects_degenerate_parameters() {
        let q = Field::rationals();
        assert!(FieldSpec::new(q.zero(), q.one()).is_err());
        assert!(FieldSpec::new(q.one(), q.zero()).is_ok());
        // r1 = 1, r2 = -1 gives alpha = 0, beta = 1: allowed
        assert!(FieldSpec::new(q.one(), q.from_i64(-1)).is_ok());
    }

    #[test]
    fn parsing() {
        assert_eq!(
            parse_rational("-3/6").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_poly("[6, -5, 1]").unwrap(),
            Poly::from_i64s(&[6, -5, 1])
        );
        assert_eq!(
            parse_poly("\"1/2\",0").unwrap().coeff(0),
            Rational::new(1.into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("2/2").unwrap().is_one());
    }
}
