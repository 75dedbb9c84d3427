//! Reduced cyclic homology: the Euler characteristic and the dimension
//! identities coming from Connes' sequence.

use num_traits::One;
use serde::Serialize;

use crate::exactfield::{totient, Poly, Rational};

use super::{log_series, one_minus_t_pow, s1, LaurentSeries, SeriesError, Window};

fn ratio(p: u64, q: u64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// `Σ_{ℓ=1}^{N} φ(ℓ)/ℓ · log hilbert(t^ℓ)` on `[0, N]`, for a Hilbert
/// series with constant term 1 known on `[0, N]`.
pub fn euler_char_of_hilbert(
    hilbert: &LaurentSeries,
    big_n: u32,
) -> Result<LaurentSeries, SeriesError> {
    let w = Window::new(0, big_n as i64);
    let base = hilbert.restrict(w)?;
    let mut acc = LaurentSeries::zeros(w);
    for l in 1..=big_n {
        let sub = base.substitute_power(l).restrict(w)?;
        let term = log_series(&sub)?.scale(&ratio(totient(l as u64), l as u64));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `-Σ_{ℓ=1}^{N} φ(ℓ)/ℓ [log(1-t^{2ℓ}) + 2 log(1-t^ℓ)]`, truncated at `t^N`.
pub fn igusa_chi(big_n: u32) -> LaurentSeries {
    assert!(big_n >= 1, "empty window");
    let w = Window::new(0, big_n as i64);
    let log_one_minus = |k: usize| {
        log_series(&LaurentSeries::from_poly(&one_minus_t_pow(k), w)).expect("constant term is 1")
    };
    let two = Rational::from_integer(2.into());
    let mut acc = LaurentSeries::zeros(w);
    for l in 1..=big_n as usize {
        let inner = log_one_minus(2 * l)
            .add(&log_one_minus(l).scale(&two))
            .expect("same window");
        acc = acc
            .sub(&inner.scale(&ratio(totient(l as u64), l as u64)))
            .expect("same window");
    }
    acc
}

/// `Σ_{ℓ=1}^{N} φ(ℓ)/ℓ · log(1-t^ℓ)` on `[0, N]`.
pub fn totient_log_sum(big_n: u32) -> LaurentSeries {
    euler_char_of_hilbert(
        &LaurentSeries::from_poly(&one_minus_t_pow(1), Window::new(0, big_n as i64)),
        big_n,
    )
    .expect("constant term is 1")
}

/// The five series determined by `HH̄_0` and `HH_3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodwillieSeries {
    pub hc0bar: LaurentSeries,
    pub hc1bar: LaurentSeries,
    pub hc2bar: LaurentSeries,
    pub hh1: LaurentSeries,
    pub hh2: LaurentSeries,
    /// Series that came out with a negative coefficient, as `name@degree`.
    pub inconsistencies: Vec<String>,
}

impl GoodwillieSeries {
    /// `HC̄_0 - HC̄_1 + HC̄_2`.
    pub fn euler_characteristic(&self) -> LaurentSeries {
        self.hc0bar
            .sub(&self.hc1bar)
            .and_then(|s| s.add(&self.hc2bar))
            .expect("same window")
    }
}

pub fn goodwillie(
    hh0bar: &LaurentSeries,
    hh3: &LaurentSeries,
) -> Result<GoodwillieSeries, SeriesError> {
    let s = s1(hh0bar.window());
    let hc1bar = hh0bar.add(hh3)?.sub(&s)?;
    let hh1 = hc1bar.add(hh0bar)?;
    let hh2 = hc1bar.add(hh3)?;
    let out = GoodwillieSeries {
        hc0bar: hh0bar.clone(),
        hc1bar,
        hc2bar: hh3.clone(),
        hh1,
        hh2,
        inconsistencies: Vec::new(),
    };
    let mut inconsistencies = Vec::new();
    for (name, series) in [
        ("HC̄_0", &out.hc0bar),
        ("HC̄_1", &out.hc1bar),
        ("HC̄_2", &out.hc2bar),
        ("HH_1", &out.hh1),
        ("HH_2", &out.hh2),
    ] {
        inconsistencies.extend(
            series
                .negative_degrees()
                .into_iter()
                .map(|d| format!("{name}@{d}")),
        );
    }
    Ok(GoodwillieSeries {
        inconsistencies,
        ..out
    })
}

/// `HH̄_0`: the unreduced series with the degree-0 unit removed.
pub fn reduce(hh0: &LaurentSeries) -> LaurentSeries {
    LaurentSeries::from_fn(hh0.window(), |d| {
        let c = hh0.coeff(d).expect("inside window").clone();
        if d == 0 {
            c - Rational::one()
        } else {
            c
        }
    })
}

/// `-t/(1-t)` on `[0, N]`.
pub fn minus_t_over_one_minus_t(big_n: u32) -> LaurentSeries {
    super::RationalFunction::new(Poly::from_i64s(&[0, -1]), one_minus_t_pow(1), 0)
        .expect("nonzero")
        .expand(Window::new(0, big_n as i64))
}
