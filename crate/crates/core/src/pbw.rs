//! The homogeneous down-up algebra `A(α, β, 0)` in the basis `u^i w^j d^k`,
//! where `w = β·ud + r1·du`.
//!
//! Multiplication never leaves this basis. The only nontrivial step is
//! `d^c u^e`, expanded through the recursion
//!
//! ```text
//! d^c u^e = (φ_{e-1} / r1) · (d^{c-1} u^{e-1}) · w + r2^e · (d^{c-1} u^e) · d
//! ```
//!
//! together with the skew-commutation rules `w u = r1 u w` and `d w = r1 w d`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{
    genericity_check, root_of_unity_order, Field, FieldElement, FieldError, FieldSpec,
};
use crate::wordoracle::{Letter, Word, WordCombination};

/// `(usual degree, special degree)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub deg: i64,
    pub sdeg: i64,
}

impl Bidegree {
    pub const fn new(deg: i64, sdeg: i64) -> Self {
        Bidegree { deg, sdeg }
    }

    pub const fn shift(self, ddeg: i64, dsdeg: i64) -> Self {
        Bidegree {
            deg: self.deg + ddeg,
            sdeg: self.sdeg + dsdeg,
        }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.deg, self.sdeg)
    }
}

/// The basis word `u^i w^j d^k`. Ordered lexicographically in `(i, j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, k: 0 };
    pub const U: Monomial = Monomial { i: 1, j: 0, k: 0 };
    pub const W: Monomial = Monomial { i: 0, j: 1, k: 0 };
    pub const D: Monomial = Monomial { i: 0, j: 0, k: 1 };

    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial { i, j, k }
    }

    pub fn deg(&self) -> i64 {
        (self.i + 2 * self.j + self.k) as i64
    }

    pub fn sdeg(&self) -> i64 {
        self.i as i64 - self.k as i64
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.deg(), self.sdeg())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("u", self.i), ("w", self.j), ("d", self.k)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(s, e)| format!("{s}^{e}"))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A finite linear combination of basis monomials with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    field: Field,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl AlgebraElement {
    pub fn zero(field: &Field) -> Self {
        AlgebraElement {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: &Field, m: Monomial) -> Self {
        Self::term(field.one(), m)
    }

    pub fn term(c: FieldElement, m: Monomial) -> Self {
        let mut out = Self::zero(c.field());
        out.add_term(m, c);
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &FieldElement, other: &AlgebraElement) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, c * a);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), other);
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(&-self.field.one(), other);
        out
    }

    pub fn scale(&self, c: &FieldElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.field);
        out.add_scaled(c, self);
        out
    }

    /// The common bidegree of all terms; `None` if inhomogeneous or zero.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CaseError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("unsupported case: {0}")]
    Unsupported(String),
}

type DuTable = Vec<(Monomial, FieldElement)>;

/// A homogeneous down-up algebra with multiplication in the `u^i w^j d^k` basis.
#[derive(Debug)]
pub struct DownUp {
    spec: FieldSpec,
    alpha: FieldElement,
    beta: FieldElement,
    r1_inv: FieldElement,
    d_pow_u_pow: Mutex<HashMap<(u32, u32), Arc<DuTable>>>,
}

impl DownUp {
    pub fn new(spec: FieldSpec) -> Self {
        let r1_inv = spec
            .r1()
            .inv()
            .expect("r1 is nonzero by FieldSpec invariant");
        DownUp {
            alpha: spec.alpha(),
            beta: spec.beta(),
            r1_inv,
            spec,
            d_pow_u_pow: Mutex::new(HashMap::new()),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn field(&self) -> &Field {
        self.spec.field()
    }

    pub fn r1(&self) -> &FieldElement {
        self.spec.r1()
    }

    pub fn r2(&self) -> &FieldElement {
        self.spec.r2()
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    /// `φ_p = Σ_{i=0}^{p} r1^i r2^{p-i}`, with `φ_{-1} = 0`.
    pub fn phi(&self, p: i64) -> FieldElement {
        assert!(p >= -1, "phi is defined for p >= -1");
        let field = self.field();
        if p < 0 {
            return field.zero();
        }
        let p = p as u64;
        let mut acc = field.zero();
        for i in 0..=p {
            acc = &acc + &(&self.r1().pow(i) * &self.r2().pow(p - i));
        }
        acc
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::monomial(self.field(), Monomial::ONE)
    }

    pub fn u(&self) -> AlgebraElement {
        AlgebraElement::monomial(self.field(), Monomial::U)
    }

    pub fn d(&self) -> AlgebraElement {
        AlgebraElement::monomial(self.field(), Monomial::D)
    }

    pub fn w1(&self) -> AlgebraElement {
        AlgebraElement::monomial(self.field(), Monomial::W)
    }

    /// `w2 = β·ud + r2·du`, expanded in the `w1` basis.
    pub fn w2(&self) -> AlgebraElement {
        let ud = self.mul(&self.u(), &self.d());
        let du = self.mul(&self.d(), &self.u());
        let mut out = ud.scale(&self.beta);
        out.add_scaled(self.r2(), &du);
        out
    }

    pub fn mono(&self, i: u32, j: u32, k: u32) -> AlgebraElement {
        AlgebraElement::monomial(self.field(), Monomial::new(i, j, k))
    }

    /// `d^c u^e` in the `u^x w^y d^z` basis.
    fn d_pow_u_pow(&self, c: u32, e: u32) -> Arc<DuTable> {
        if let Some(t) = self.d_pow_u_pow.lock().unwrap().get(&(c, e)) {
            return Arc::clone(t);
        }
        let one = self.field().one();
        let table: DuTable = if c == 0 {
            vec![(Monomial::new(e, 0, 0), one)]
        } else if e == 0 {
            vec![(Monomial::new(0, 0, c), one)]
        } else {
            let mut acc = AlgebraElement::zero(self.field());
            // (φ_{e-1}/r1) · d^{c-1} u^{e-1} · w; moving w left past d^z costs r1^z
            let lead = &self.phi(e as i64 - 1) * &self.r1_inv;
            if !lead.is_zero() {
                for (m, a) in self.d_pow_u_pow(c - 1, e - 1).iter() {
                    let coef = &(&lead * a) * &self.r1().pow(m.k as u64);
                    acc.add_term(Monomial::new(m.i, m.j + 1, m.k), coef);
                }
            }
            // r2^e · d^{c-1} u^e · d
            let tail = self.r2().pow(e as u64);
            if !tail.is_zero() {
                for (m, a) in self.d_pow_u_pow(c - 1, e).iter() {
                    acc.add_term(Monomial::new(m.i, m.j, m.k + 1), &tail * a);
                }
            }
            acc.terms.into_iter().collect()
        };
        let table = Arc::new(table);
        self.d_pow_u_pow
            .lock()
            .unwrap()
            .insert((c, e), Arc::clone(&table));
        table
    }

    /// Product of two basis monomials.
    pub fn mono_product(&self, a: Monomial, b: Monomial) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field());
        for (m, c) in self.d_pow_u_pow(a.k, b.i).iter() {
            // u^{a.i} w^{a.j} · u^x w^y d^z · w^{b.j} d^{b.k}
            let twist = self
                .r1()
                .pow(a.j as u64 * m.i as u64 + m.k as u64 * b.j as u64);
            out.add_term(
                Monomial::new(a.i + m.i, a.j + m.j + b.j, m.k + b.k),
                &twist * c,
            );
        }
        out
    }

    /// The product `x · y`, expressed in the `u^i w^j d^k` basis.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field());
        for (ma, ca) in x.terms() {
            for (mb, cb) in y.terms() {
                let c = ca * cb;
                out.add_scaled(&c, &self.mono_product(*ma, *mb));
            }
        }
        out
    }

    /// `x1 · x2 · ... · xn`.
    pub fn mul_all(&self, factors: &[&AlgebraElement]) -> AlgebraElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, x: &AlgebraElement, e: u32) -> AlgebraElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// The Nakayama automorphism `u ↦ -β⁻¹u`, `d ↦ -βd` (fixing `w`).
    pub fn apply_sigma(&self, x: &AlgebraElement) -> Result<AlgebraElement, CaseError> {
        if self.beta.is_zero() {
            return Err(CaseError::Unsupported("sigma requires beta != 0".into()));
        }
        let su = -self.beta.inv()?;
        let sd = -self.beta.clone();
        let mut out = AlgebraElement::zero(self.field());
        for (m, c) in x.terms() {
            let f = &su.pow(m.i as u64) * &sd.pow(m.k as u64);
            out.add_term(*m, &f * c);
        }
        Ok(out)
    }

    /// `u^i (β·ud + r1·du)^j d^k` as a combination of words in the free algebra.
    pub fn word_expansion(&self, m: Monomial) -> WordCombination {
        let field = self.field();
        let mut w = WordCombination::zero(field);
        w.add_term(
            Word::from_letters(vec![Letter::U, Letter::D]),
            self.beta.clone(),
        );
        w.add_term(
            Word::from_letters(vec![Letter::D, Letter::U]),
            self.r1().clone(),
        );
        let mut out = WordCombination::word(field, Word::repeat(Letter::U, m.i as usize));
        for _ in 0..m.j {
            out = out.concat(&w);
        }
        out.concat(&WordCombination::word(
            field,
            Word::repeat(Letter::D, m.k as usize),
        ))
    }
}

/// All `u^i w^j d^k` of the given bidegree, lexicographic in `(i, j, k)`.
pub fn graded_basis(b: Bidegree) -> Vec<Monomial> {
    if b.deg < 0 {
        return Vec::new();
    }
    (0..=b.deg)
        .filter_map(|i| {
            let k = i - b.sdeg;
            let rest = b.deg - i - k;
            (k >= 0 && rest >= 0 && rest % 2 == 0)
                .then(|| Monomial::new(i as u32, (rest / 2) as u32, k as u32))
        })
        .collect()
}

pub fn dim_bigraded(b: Bidegree) -> usize {
    graded_basis(b).len()
}

pub fn dim_total(deg: i64) -> usize {
    if deg < 0 {
        return 0;
    }
    (-deg..=deg)
        .map(|s| dim_bigraded(Bidegree::new(deg, s)))
        .sum()
}

/// Which closed-form family an algebra belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `r1^i r2^j != 1` for all `(i, j) != (0, 0)` (checked on a finite window).
    F1,
    /// `β = -1`, `r1` not a root of unity (checked on a finite window).
    F2NonRoot,
    /// `β = -1`, `r1` a primitive n-th root of unity.
    F2Root { n: u32 },
}

impl Family {
    pub fn is_f2(&self) -> bool {
        !matches!(self, Family::F1)
    }

    /// Order of `r1` for root-of-unity cases, 0 otherwise.
    pub fn n(&self) -> u32 {
        match self {
            Family::F2Root { n } => *n,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::F1 => write!(f, "F1"),
            Family::F2NonRoot => write!(f, "F2-nonroot"),
            Family::F2Root { n } => write!(f, "F2-root(n={n})"),
        }
    }
}

/// An algebra together with its classification.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    name: String,
    algebra: Arc<DownUp>,
    family: Family,
    window: u64,
}

impl CaseSpec {
    /// Classifies the algebra: `β = -1` gives F2 (root or not, searching orders up to
    /// `window`), otherwise the genericity hypothesis must hold for exponents up to
    /// `window`.
    pub fn classify(name: &str, spec: FieldSpec, window: u64) -> Result<Self, CaseError> {
        let minus_one = -spec.field().one();
        let family = if spec.beta() == minus_one {
            match root_of_unity_order(spec.r1(), window)? {
                Some(n) => Family::F2Root { n: n as u32 },
                None => Family::F2NonRoot,
            }
        } else if genericity_check(&spec, window) {
            Family::F1
        } else {
            return Err(CaseError::Unsupported(format!(
                "alpha = {}, beta = {} is neither generic nor Calabi-Yau (beta = -1)",
                spec.alpha(),
                spec.beta()
            )));
        };
        Ok(CaseSpec {
            name: name.to_string(),
            algebra: Arc::new(DownUp::new(spec)),
            family,
            window,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &DownUp {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<DownUp> {
        Arc::clone(&self.algebra)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.family.n()
    }

    /// Exponent window used for the genericity and root-of-unity checks.
    pub fn window(&self) -> u64 {
        self.window
    }

    pub fn alpha(&self) -> &FieldElement {
        self.algebra.alpha()
    }

    pub fn beta(&self) -> &FieldElement {
        self.algebra.beta()
    }
}
