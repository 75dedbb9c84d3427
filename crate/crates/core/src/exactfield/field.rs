//! Simple extensions `Q[θ]/(m(θ))` and their elements.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::{FieldError, Rational};

#[derive(Debug)]
struct FieldInner {
    modulus: Poly,
}

/// Handle to a coefficient field `Q[θ]/(m(θ))`.
///
/// Cloning is cheap. Irreducibility of `m` is not checked here: a
/// reducible modulus surfaces as [`FieldError::ReducibleModulus`] the
/// first time an inversion hits a zero divisor.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl Field {
    /// The rationals, realized as `Q[θ]/(θ)`.
    pub fn rationals() -> Self {
        Field(Arc::new(FieldInner {
            modulus: Poly::from_i64s(&[0, 1]),
        }))
    }

    pub fn new(modulus: Poly) -> Result<Self, FieldError> {
        match modulus.degree() {
            None | Some(0) => Err(FieldError::InvalidModulus(format!(
                "modulus {modulus} must have degree at least 1"
            ))),
            Some(_) if !modulus.is_monic() => Err(FieldError::InvalidModulus(format!(
                "modulus {modulus} must be monic"
            ))),
            Some(_) => Ok(Field(Arc::new(FieldInner { modulus }))),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.degree().expect("modulus is nonzero")
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: Vec::new(),
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(&self, p: i64, q: i64) -> FieldElement {
        self.from_rational(Rational::new(p.into(), q.into()))
    }

    pub fn from_rational(&self, c: Rational) -> FieldElement {
        self.from_poly(&Poly::constant(c))
    }

    /// The class of `θ`.
    pub fn generator(&self) -> FieldElement {
        self.from_poly(&Poly::from_i64s(&[0, 1]))
    }

    /// Reduces a polynomial in `θ` modulo `m`.
    pub fn from_poly(&self, p: &Poly) -> FieldElement {
        let (_, r) = p.div_rem(&self.0.modulus);
        FieldElement {
            coeffs: r.into_coeffs(),
            field: self.clone(),
        }
    }

    pub fn same_as(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Field {}

/// A residue class in `Q[θ]/(m(θ))`, stored as its reduced representative.
#[derive(Clone, Debug)]
pub struct FieldElement {
    coeffs: Vec<Rational>,
    field: Field,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `Some(q)` when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let sum = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                match other.coeffs.get(k) {
                    Some(b) => a + b,
                    None => a,
                }
            })
            .collect();
        Ok(FieldElement {
            coeffs: Poly::new(sum).into_coeffs(),
            field: self.field.clone(),
        })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.field.zero());
        }
        if self.field.degree() == 1 {
            let c = &self.coeffs[0] * &other.coeffs[0];
            return Ok(self.field.from_rational(c));
        }
        Ok(self.field.from_poly(&(&self.to_poly() * &other.to_poly())))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let (g, s) = self.to_poly().ext_gcd_left(self.field.modulus());
        if g != Poly::one() {
            return Err(FieldError::ReducibleModulus {
                modulus: self.field.modulus().to_string(),
                factor: g.to_string(),
            });
        }
        Ok(self.field.from_poly(&s))
    }

    pub fn scale(&self, c: &Rational) -> FieldElement {
        FieldElement {
            coeffs: Poly::new(self.coeffs.iter().map(|a| a * c).collect()).into_coeffs(),
            field: self.field.clone(),
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents go through [`FieldElement::inv`].
    pub fn powi(&self, e: i64) -> Result<FieldElement, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same_as(&other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs)
            .expect("field elements from different fields")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(&-rhs)
            .expect("field elements from different fields")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs)
            .expect("field elements from different fields")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            field: self.field.clone(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Rationals render as `p/q` (or `p` for integers); proper extension
/// elements render as their coefficient list in `θ`, lowest degree first.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", Poly::new(self.coeffs.clone())),
        }
    }
}
