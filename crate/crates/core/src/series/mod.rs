//! Truncated Laurent series with exact rational coefficients, rational
//! functions in `t`, and the closed-form Hilbert series they encode.

mod catalog;
mod cyclic;

pub use catalog::{
    amended_dual_cohomology, amended_homology, catalog_cohomology, catalog_homology,
    dual_cohomology, s1, s2,
};
pub use cyclic::{
    euler_char_of_hilbert, goodwillie, igusa_chi, minus_t_over_one_minus_t, reduce,
    totient_log_sum, GoodwillieSeries,
};

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{Poly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("window mismatch: [{0}, {1}] vs [{2}, {3}]")]
    WindowMismatch(i64, i64, i64, i64),
    #[error("degree {0} lies outside the window [{1}, {2}]")]
    OutsideWindow(i64, i64, i64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
}

/// Closed degree range `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn degrees(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn contains(self, d: i64) -> bool {
        (self.lo..=self.hi).contains(&d)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `Σ_{lo ≤ k ≤ hi} c_k t^k`; coefficients outside the window are unknown.
///
/// Products treat both factors as starting at their lower bound, which is
/// how every expansion in this crate is produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    lo: i64,
    hi: i64,
    coeffs: Vec<Rational>,
}

impl LaurentSeries {
    pub fn new(lo: i64, coeffs: Vec<Rational>) -> Self {
        let hi = lo + coeffs.len() as i64 - 1;
        LaurentSeries { lo, hi, coeffs }
    }

    pub fn zeros(w: Window) -> Self {
        Self::from_fn(w, |_| Rational::zero())
    }

    pub fn from_fn(w: Window, mut f: impl FnMut(i64) -> Rational) -> Self {
        LaurentSeries {
            lo: w.lo,
            hi: w.hi,
            coeffs: w.degrees().map(&mut f).collect(),
        }
    }

    pub fn from_integers(lo: i64, values: &[i64]) -> Self {
        Self::new(
            lo,
            values
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    /// A polynomial, exact on the whole window.
    pub fn from_poly(p: &Poly, w: Window) -> Self {
        Self::from_fn(w, |d| {
            if d < 0 {
                Rational::zero()
            } else {
                p.coeff(d as usize)
            }
        })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn window(&self) -> Window {
        Window::new(self.lo, self.hi)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: i64) -> Result<&Rational, SeriesError> {
        if d < self.lo || d > self.hi {
            return Err(SeriesError::OutsideWindow(d, self.lo, self.hi));
        }
        Ok(&self.coeffs[(d - self.lo) as usize])
    }

    /// Coefficient as an integer, if it is one.
    pub fn integer_coeff(&self, d: i64) -> Result<Option<i64>, SeriesError> {
        let c = self.coeff(d)?;
        Ok(c.is_integer()
            .then(|| i64::try_from(c.to_integer()).ok())
            .flatten())
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        (self.lo..).zip(self.coeffs.iter())
    }

    fn check_window(&self, other: &Self) -> Result<(), SeriesError> {
        if self.window() != other.window() {
            return Err(SeriesError::WindowMismatch(
                self.lo, self.hi, other.lo, other.hi,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_window(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LaurentSeries { coeffs, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..*self
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            lo: self.lo + k,
            hi: self.hi + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Product, known on `[lo1 + lo2, min(lo1 + hi2, lo2 + hi1)]`.
    pub fn mul(&self, other: &Self) -> Self {
        let lo = self.lo + other.lo;
        let hi = (self.lo + other.hi).min(other.lo + self.hi);
        Self::from_fn(Window::new(lo, hi), |e| {
            let mut s = Rational::zero();
            for (k, a) in self.iter() {
                let j = e - k;
                if j < other.lo {
                    break;
                }
                if j <= other.hi && !a.is_zero() {
                    s += a * &other.coeffs[(j - other.lo) as usize];
                }
            }
            s
        })
    }

    /// Restriction to a sub-window.
    pub fn restrict(&self, w: Window) -> Result<Self, SeriesError> {
        if w.lo < self.lo || w.hi > self.hi {
            return Err(SeriesError::WindowMismatch(w.lo, w.hi, self.lo, self.hi));
        }
        Ok(Self::from_fn(w, |d| {
            self.coeffs[(d - self.lo) as usize].clone()
        }))
    }

    /// `f(t^l)` for `l ≥ 1`, on `[l·lo, l·hi]`.
    pub fn substitute_power(&self, l: u32) -> Self {
        assert!(l >= 1, "substitution t -> t^0");
        let l = l as i64;
        Self::from_fn(Window::new(l * self.lo, l * self.hi), |d| {
            if d.rem_euclid(l) == 0 {
                self.coeffs[(d / l - self.lo) as usize].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Degrees with a negative coefficient.
    pub fn negative_degrees(&self) -> Vec<i64> {
        self.iter()
            .filter(|(_, c)| c < &&Rational::zero())
            .map(|(d, _)| d)
            .collect()
    }

    /// Power-series part on `[0, hi]` as a dense vector; requires vanishing below zero.
    fn power_part(&self, what: &str) -> Result<Vec<Rational>, SeriesError> {
        if self.lo > 0 || self.hi < 0 {
            return Err(SeriesError::Domain(format!(
                "{what} needs degree 0 inside the window"
            )));
        }
        if self.iter().any(|(d, c)| d < 0 && !c.is_zero()) {
            return Err(SeriesError::Domain(format!(
                "{what} of a series with negative-degree terms"
            )));
        }
        Ok(self.coeffs[(-self.lo) as usize..].to_vec())
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    lo: i64,
    hi: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaurentSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            lo: self.lo,
            hi: self.hi,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| crate::exactfield::parse_rational(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if coeffs.len() as i64 != j.hi - j.lo + 1 {
            return Err(serde::de::Error::custom(
                "coefficient count does not match window",
            ));
        }
        Ok(LaurentSeries {
            lo: j.lo,
            hi: j.hi,
            coeffs,
        })
    }
}

/// `t^shift · numerator / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Poly,
    denominator: Poly,
    shift: i64,
}

impl RationalFunction {
    /// Powers of `t` dividing the denominator are moved into the shift.
    pub fn new(numerator: Poly, denominator: Poly, shift: i64) -> Result<Self, SeriesError> {
        if denominator.is_zero() {
            return Err(SeriesError::Domain("zero denominator".into()));
        }
        let v = denominator
            .coeffs()
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        let denominator = Poly::new(denominator.coeffs()[v..].to_vec());
        Ok(RationalFunction {
            numerator,
            denominator,
            shift: shift - v as i64,
        })
    }

    pub fn poly(p: Poly) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Poly::one(),
            shift: 0,
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Exact expansion on `w` by long division.
    pub fn expand(&self, w: Window) -> LaurentSeries {
        let top = w.hi - self.shift;
        let mut c: Vec<Rational> = Vec::new();
        if top >= 0 {
            let inv0 = self.denominator.coeff(0).recip();
            for m in 0..=top as usize {
                let mut s = self.numerator.coeff(m);
                for k in 1..=m.min(self.denominator.degree().unwrap_or(0)) {
                    s -= self.denominator.coeff(k) * &c[m - k];
                }
                c.push(s * &inv0);
            }
        }
        LaurentSeries::from_fn(w, |d| {
            let m = d - self.shift;
            if m < 0 {
                Rational::zero()
            } else {
                c[m as usize].clone()
            }
        })
    }
}

/// Formal `log f = Σ_{m≥1} (-1)^{m+1} (f-1)^m / m` on `[min(lo, 0), hi]`.
pub fn log_series(f: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
    let p = f.power_part("log")?;
    if !p[0].is_one() {
        return Err(SeriesError::Domain(format!(
            "log needs constant term 1, found {}",
            p[0]
        )));
    }
    let n = p.len();
    let mut x = p.clone();
    x[0] = Rational::zero();
    let mut out = vec![Rational::zero(); n];
    let mut power = x.clone();
    for m in 1..n {
        let sign = if m % 2 == 1 {
            Rational::one()
        } else {
            -Rational::one()
        };
        let w = sign / Rational::from_integer(m.into());
        for (o, c) in out.iter_mut().zip(&power) {
            *o += c * &w;
        }
        power = truncated_product(&power, &x);
    }
    Ok(LaurentSeries::from_fn(f.window(), |d| {
        if d < 0 {
            Rational::zero()
        } else {
            out[d as usize].clone()
        }
    }))
}

/// Formal exponential of a series with vanishing constant term.
pub fn exp_series(g: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
    let p = g.power_part("exp")?;
    if !p[0].is_zero() {
        return Err(SeriesError::Domain("exp needs constant term 0".into()));
    }
    // n f_n = Σ_{k=1}^{n} k g_k f_{n-k}
    let mut f = vec![Rational::one()];
    for n in 1..p.len() {
        let mut s = Rational::zero();
        for k in 1..=n {
            s += Rational::from_integer(k.into()) * &p[k] * &f[n - k];
        }
        f.push(s / Rational::from_integer(n.into()));
    }
    Ok(LaurentSeries::from_fn(g.window(), |d| {
        if d < 0 {
            Rational::zero()
        } else {
            f[d as usize].clone()
        }
    }))
}

fn truncated_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1 - t^k`.
pub fn one_minus_t_pow(k: usize) -> Poly {
    -&Poly::x_pow_minus_one(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries) -> Vec<i64> {
        s.iter()
            .map(|(d, _)| s.integer_coeff(d).unwrap().unwrap())
            .collect()
    }

    fn hilbert_a() -> RationalFunction {
        let den = &(&one_minus_t_pow(2) * &one_minus_t_pow(1)) * &one_minus_t_pow(1);
        RationalFunction::new(Poly::one(), den, 0).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(
            ints(&hilbert_a().expand(Window::new(0, 6))),
            vec![1, 2, 4, 6, 9, 12, 16]
        );
        let hh0 =
            RationalFunction::new(Poly::from_i64s(&[1, 2, 2]), one_minus_t_pow(2), 0).unwrap();
        assert_eq!(
            ints(&hh0.expand(Window::new(0, 6))),
            vec![1, 2, 3, 2, 3, 2, 3]
        );
        let hh3 = RationalFunction::new(Poly::one(), one_minus_t_pow(2), -4).unwrap();
        assert_eq!(
            ints(&hh3.expand(Window::new(-4, 4))),
            vec![1, 0, 1, 0, 1, 0, 1, 0, 1]
        );
        let same = RationalFunction::new(
            Poly::one(),
            &Poly::monomial(Rational::one(), 4) * &one_minus_t_pow(2),
            0,
        );
        assert_eq!(
            same.unwrap().expand(Window::new(-4, 4)),
            hh3.expand(Window::new(-4, 4))
        );
        assert!(RationalFunction::new(Poly::one(), Poly::zero(), 0).is_err());
    }

    #[test]
    fn expansion_times_denominator() {
        let f = hilbert_a();
        let w = Window::new(0, 15);
        let den = LaurentSeries::from_poly(f.denominator(), w);
        assert_eq!(
            f.expand(w).mul(&den),
            LaurentSeries::from_poly(f.numerator(), w)
        );
    }

    #[test]
    fn window_arithmetic() {
        let a = LaurentSeries::from_integers(0, &[1, 2, 3]);
        let b = LaurentSeries::from_integers(1, &[1, 2, 3]);
        assert!(matches!(a.add(&b), Err(SeriesError::WindowMismatch(..))));
        assert_eq!(a.mul(&b).window(), Window::new(1, 3));
        assert_eq!(ints(&a.mul(&b)), vec![1, 4, 10]);
        assert!(a.coeff(3).is_err());
        assert_eq!(ints(&a.substitute_power(2)), vec![1, 0, 2, 0, 3]);
    }

    #[test]
    fn logarithms() {
        let inv = RationalFunction::new(Poly::one(), one_minus_t_pow(1), 0).unwrap();
        let l = log_series(&inv.expand(Window::new(0, 5))).unwrap();
        let want: Vec<Rational> = (1..=5).map(|m| Rational::new(1.into(), m.into())).collect();
        assert_eq!(l.restrict(Window::new(1, 5)).unwrap().coeffs(), &want[..]);
        let one = LaurentSeries::from_integers(0, &[1, 0, 0, 0]);
        assert_eq!(
            log_series(&one).unwrap(),
            LaurentSeries::from_integers(0, &[0, 0, 0, 0])
        );
        assert!(log_series(&LaurentSeries::from_integers(0, &[2, 1])).is_err());
        assert!(log_series(&LaurentSeries::from_integers(1, &[1, 1])).is_err());
    }

    #[test]
    fn exp_inverts_log() {
        let f = hilbert_a().expand(Window::new(0, 10));
        assert_eq!(exp_series(&log_series(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn json_round_trip() {
        let s = LaurentSeries::new(
            -1,
            vec![Rational::new(1.into(), 2.into()), Rational::zero()],
        );
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"lo":-1,"hi":0,"coeffs":["1/2","0"]}"#);
        assert_eq!(serde_json::from_str::<LaurentSeries>(&j).unwrap(), s);
    }
}
