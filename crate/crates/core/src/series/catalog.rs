//! Closed-form Hilbert series of Hochschild (co)homology, per parameter family.

use crate::exactfield::{Poly, Rational};
use crate::pbw::Family;

use super::{one_minus_t_pow, LaurentSeries, RationalFunction, SeriesError, Window};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rf(num: &[i64], den: Poly, shift: i64) -> RationalFunction {
    RationalFunction::new(Poly::from_i64s(num), den, shift)
        .expect("catalog denominators are nonzero")
}

fn prod(factors: &[Poly]) -> Poly {
    factors.iter().fold(Poly::one(), |acc, f| &acc * f)
}

/// `t(2+3t)/(1-t²)`
pub fn s1(w: Window) -> LaurentSeries {
    rf(&[0, 2, 3], one_minus_t_pow(2), 0).expand(w)
}

/// `t²/(1-t⁴)`
pub fn s2(w: Window) -> LaurentSeries {
    rf(&[0, 0, 1], one_minus_t_pow(4), 0).expand(w)
}

fn f_n(n: usize, w: Window) -> LaurentSeries {
    rf(
        &[1],
        prod(&[one_minus_t_pow(4), one_minus_t_pow(n), one_minus_t_pow(n)]),
        0,
    )
    .expand(w)
}

fn g_n(n: usize, w: Window) -> LaurentSeries {
    let mut num = vec![0; 2 * n + 1];
    num[2] += 1;
    num[2 * n] -= 1;
    rf(&num, one_minus_t_pow(4), 0).expand(w)
}

fn h_n(n: usize, w: Window) -> LaurentSeries {
    let num = &one_minus_t_pow(n - 1).scale(&q(2)) * &Poly::from_i64s(&[0, 1]);
    RationalFunction::new(num, prod(&[one_minus_t_pow(1), one_minus_t_pow(n)]), 0)
        .expect("nonzero")
        .expand(w)
}

/// `t⁴/((1-t⁴)(1-tⁿ)²)`
fn top_n(n: usize, w: Window) -> LaurentSeries {
    rf(
        &[1],
        prod(&[one_minus_t_pow(4), one_minus_t_pow(n), one_minus_t_pow(n)]),
        4,
    )
    .expand(w)
}

fn unit(w: Window) -> LaurentSeries {
    LaurentSeries::from_fn(w, |d| q(i64::from(d == 0)))
}

fn sum(terms: &[&LaurentSeries]) -> LaurentSeries {
    let (first, rest) = terms.split_first().expect("nonempty sum");
    rest.iter().fold((*first).clone(), |acc, t| {
        acc.add(t).expect("shared window")
    })
}

/// Printed Hilbert series of `HH_i`, `i = 0..=3`, for a classified family.
///
/// For `n = 1` and `n = 2` the series are those listed for `r1 = 1` and
/// `r1 = -1` respectively.
pub fn catalog_homology(family: Family, i: usize, w: Window) -> Result<LaurentSeries, SeriesError> {
    if i > 3 {
        return Ok(LaurentSeries::zeros(w));
    }
    let one_t2 = one_minus_t_pow(2);
    let hh0_generic = || rf(&[1, 2, 2], one_t2.clone(), 0).expand(w);
    let out = match family {
        Family::F1 => match i {
            0 => hh0_generic(),
            1 => s1(w),
            _ => LaurentSeries::zeros(w),
        },
        Family::F2NonRoot => {
            let one_t8 = one_minus_t_pow(8);
            match i {
                0 => hh0_generic(),
                1 => s1(w).add(&rf(&[1], one_t8, 4).expand(w))?,
                2 => rf(&[2], one_t8, 4).expand(w),
                _ => rf(&[1], one_t8, 4).expand(w),
            }
        }
        Family::F2Root { n: 1 } => match i {
            0 => rf(&[1], prod(&[one_minus_t_pow(1), one_minus_t_pow(1)]), 0).expand(w),
            // t(2-t)(1+t²) = 2t - t² + 2t³ - t⁴
            1 => rf(
                &[0, 2, -1, 2, -1],
                prod(&[one_minus_t_pow(1), one_minus_t_pow(1)]),
                0,
            )
            .expand(w),
            2 => rf(&[2, 2, -2], prod(&[one_t2, one_minus_t_pow(1)]), 3).expand(w),
            _ => rf(&[1], one_t2, 4).expand(w),
        },
        Family::F2Root { n: 2 } => {
            let den = prod(&[one_t2.clone(), one_t2, Poly::from_i64s(&[1, 0, 1])]);
            match i {
                0 => rf(&[1, 2, 2, 0, -1, -2], den, 0).expand(w),
                1 => rf(&[0, 2, 3, 0, 1, -2], den, 0).expand(w),
                2 => rf(&[2], den, 4).expand(w),
                _ => rf(&[1], one_minus_t_pow(4), 4).expand(w),
            }
        }
        Family::F2Root { n } => {
            let n = n as usize;
            let middle = if n.is_multiple_of(2) {
                s2(w)
            } else {
                g_n(n, w)
            };
            let hh0 = sum(&[&f_n(n, w), &h_n(n, w), &middle]);
            let top = top_n(n, w);
            let hh0bar = hh0.sub(&unit(w))?;
            match i {
                0 => hh0,
                1 => sum(&[&top, &hh0bar, &hh0bar]).sub(&s1(w))?,
                2 => sum(&[&top, &top, &hh0bar]).sub(&s1(w))?,
                _ => top,
            }
        }
    };
    Ok(out)
}

/// The series obtained by counting the explicit bases instead of the printed
/// closed forms; differs from [`catalog_homology`] only for the non-root and
/// `n >= 3` families.
///
/// Non-root: `HH_3 = t⁴/(1-t⁴)`, one class `w1^k w2^k` in each degree `4k+4`.
/// Roots with `n >= 3`: the triples `(i,j,k)` with `n | j-i` and `n | j-k`
/// number `(1+t^{2n})/((1-t⁴)(1-tⁿ)²)` by degree, so `f_n` and the `HH_3`
/// term both pick up the factor `1+t^{2n}`.
pub fn amended_homology(family: Family, i: usize, w: Window) -> Result<LaurentSeries, SeriesError> {
    if i > 3 {
        return Ok(LaurentSeries::zeros(w));
    }
    match family {
        Family::F2NonRoot => {
            let top = rf(&[1], one_minus_t_pow(4), 4).expand(w);
            Ok(match i {
                0 => rf(&[1, 2, 2], one_minus_t_pow(2), 0).expand(w),
                1 => s1(w).add(&top)?,
                2 => top.scale(&q(2)),
                _ => top,
            })
        }
        Family::F2Root { n } if n >= 3 => {
            let n = n as usize;
            let mut num = vec![0; 2 * n + 1];
            num[0] = 1;
            num[2 * n] = 1;
            let den = prod(&[one_minus_t_pow(4), one_minus_t_pow(n), one_minus_t_pow(n)]);
            let f = rf(&num, den.clone(), 0).expand(w);
            let middle = if n.is_multiple_of(2) {
                s2(w)
            } else {
                g_n(n, w)
            };
            let hh0 = sum(&[&f, &h_n(n, w), &middle]);
            let top = rf(&num, den, 4).expand(w);
            let hh0bar = hh0.sub(&unit(w))?;
            Ok(match i {
                0 => hh0,
                1 => sum(&[&top, &hh0bar, &hh0bar]).sub(&s1(w))?,
                2 => sum(&[&top, &top, &hh0bar]).sub(&s1(w))?,
                _ => top,
            })
        }
        _ => catalog_homology(family, i, w),
    }
}

/// Printed Hilbert series of `HH^i`; only the generic family has one.
pub fn catalog_cohomology(
    family: Family,
    i: usize,
    w: Window,
) -> Result<LaurentSeries, SeriesError> {
    if family != Family::F1 {
        return Err(SeriesError::Unsupported(format!(
            "no printed cohomology series for {family}; use the duality prediction"
        )));
    }
    Ok(match i {
        0 => unit(w),
        1 => unit(w).scale(&q(2)),
        // t⁻² + 2 + t²/(1-t²) = (1 + t² - t⁴)/(t²(1-t²))
        2 => rf(&[1, 0, 1, 0, -1], one_minus_t_pow(2), -2).expand(w),
        3 => rf(&[1], one_minus_t_pow(2), -4).expand(w),
        _ => LaurentSeries::zeros(w),
    })
}

/// `HH^i(t) = t⁻⁴ · HH_{3-i}(t)`, the Calabi-Yau prediction for `β = -1`.
pub fn dual_cohomology(family: Family, i: usize, w: Window) -> Result<LaurentSeries, SeriesError> {
    if !family.is_f2() {
        return Err(SeriesError::Unsupported(format!(
            "{family} is not Calabi-Yau"
        )));
    }
    if i > 3 {
        return Ok(LaurentSeries::zeros(w));
    }
    Ok(catalog_homology(family, 3 - i, Window::new(w.lo + 4, w.hi + 4))?.shift(-4))
}

/// [`dual_cohomology`] built from [`amended_homology`].
pub fn amended_dual_cohomology(
    family: Family,
    i: usize,
    w: Window,
) -> Result<LaurentSeries, SeriesError> {
    if !family.is_f2() {
        return Err(SeriesError::Unsupported(format!(
            "{family} is not Calabi-Yau"
        )));
    }
    if i > 3 {
        return Ok(LaurentSeries::zeros(w));
    }
    Ok(amended_homology(family, 3 - i, Window::new(w.lo + 4, w.hi + 4))?.shift(-4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries) -> Vec<i64> {
        s.iter()
            .map(|(d, _)| s.integer_coeff(d).unwrap().unwrap())
            .collect()
    }

    fn hom(f: Family, i: usize) -> Vec<i64> {
        ints(&catalog_homology(f, i, Window::new(0, 12)).unwrap())
    }

    #[test]
    fn generic_family() {
        assert_eq!(hom(Family::F1, 0)[..7], [1, 2, 3, 2, 3, 2, 3]);
        assert!(hom(Family::F1, 3).iter().all(|&x| x == 0));
        assert_eq!(hom(Family::F1, 1)[..4], [0, 2, 3, 2]);
    }

    #[test]
    fn nonroot_family() {
        let hh3 = hom(Family::F2NonRoot, 3);
        let ones: Vec<usize> = (0..13).filter(|&d| hh3[d] != 0).collect();
        assert_eq!(ones, vec![4, 12]);
        assert!(hh3.iter().all(|&x| x <= 1));
        assert_eq!(
            hom(Family::F2NonRoot, 1),
            vec![0, 2, 3, 2, 4, 2, 3, 2, 3, 2, 3, 2, 4]
        );
    }

    #[test]
    fn root_families() {
        let n4 = Family::F2Root { n: 4 };
        assert_eq!(hom(n4, 0)[..9], [1, 2, 3, 2, 3, 2, 3, 2, 6]);
        assert_eq!(hom(n4, 0)[12], 10);
        assert_eq!(hom(n4, 3), vec![0, 0, 0, 0, 1, 0, 0, 0, 3, 0, 0, 0, 6]);
        let n3 = Family::F2Root { n: 3 };
        assert_eq!(hom(n3, 0), vec![1, 2, 3, 2, 3, 2, 3, 4, 3, 4, 5, 4, 6]);
        assert_eq!(hom(n3, 3), vec![0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 3, 2, 1]);
        assert_eq!(
            hom(Family::F2Root { n: 2 }, 0),
            vec![1, 2, 3, 2, 3, 2, 5, 2, 5, 2, 7, 2, 7]
        );
        assert_eq!(
            hom(Family::F2Root { n: 1 }, 0),
            (1..=13).collect::<Vec<_>>()
        );
        assert_eq!(
            hom(Family::F2Root { n: 1 }, 3),
            vec![0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]
        );
    }

    #[test]
    fn amended_series() {
        let am = |f, i| ints(&amended_homology(f, i, Window::new(0, 12)).unwrap());
        assert_eq!(
            am(Family::F2NonRoot, 3),
            vec![0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
        );
        assert_eq!(am(Family::F2NonRoot, 2)[8], 2);
        let n4 = Family::F2Root { n: 4 };
        assert_eq!(am(n4, 0)[8], 7);
        assert_eq!(am(n4, 3)[12], 7);
        assert_eq!(am(Family::F2Root { n: 3 }, 3)[10], 4);
        assert_eq!(am(Family::F2Root { n: 3 }, 0)[12], 9);
        for f in [Family::F1, Family::F2Root { n: 1 }, Family::F2Root { n: 2 }] {
            for i in 0..4 {
                assert_eq!(am(f, i), hom(f, i));
            }
        }
    }

    #[test]
    fn cohomology() {
        let w = Window::new(-4, 6);
        let hh2 = ints(&catalog_cohomology(Family::F1, 2, w).unwrap());
        assert_eq!(hh2, vec![0, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1]);
        let hh1 = ints(&catalog_cohomology(Family::F1, 1, w).unwrap());
        assert_eq!(hh1[4], 2);
        assert_eq!(hh1.iter().sum::<i64>(), 2);
        assert!(catalog_cohomology(Family::F2NonRoot, 0, w).is_err());
        let dual = ints(&dual_cohomology(Family::F2NonRoot, 0, w).unwrap());
        assert_eq!(dual[4], 1);
        assert!(dual_cohomology(Family::F1, 0, w).is_err());
    }
}
