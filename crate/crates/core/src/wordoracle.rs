//! Brute-force normal forms in the free algebra `K<u, d>` modulo
//!
//! ```text
//! d d u -> α·dud + β·udd
//! d u u -> α·udu + β·uud
//! ```
//!
//! Shares nothing with [`crate::pbw`] except field arithmetic, so it serves as
//! an independent check of the `u^i w^j d^k` multiplication. Normal words are
//! exactly `u^i (du)^j d^k`. Every rewrite strictly lowers the number of
//! inversions (a `d` to the left of a `u`), which bounds the reduction.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactfield::{Field, FieldElement};
use crate::pbw::{AlgebraElement, DownUp, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn repeat(l: Letter, n: usize) -> Self {
        Word(vec![l; n])
    }

    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                'u' => Some(Letter::U),
                'd' => Some(Letter::D),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Pairs `(p, q)` with `p < q`, `self[p] = d`, `self[q] = u`.
    pub fn inversions(&self) -> usize {
        let mut ds = 0;
        let mut inv = 0;
        for l in &self.0 {
            match l {
                Letter::D => ds += 1,
                Letter::U => inv += ds,
            }
        }
        inv
    }

    /// Start positions of `ddu` and `duu`.
    fn redexes(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.windows(3).enumerate().filter_map(|(p, w)| {
            matches!(
                w,
                [Letter::D, Letter::D, Letter::U] | [Letter::D, Letter::U, Letter::U]
            )
            .then_some(p)
        })
    }

    pub fn is_normal(&self) -> bool {
        self.redexes().next().is_none()
    }

    /// `(i, j, k)` when the word is `u^i (du)^j d^k`.
    pub fn pbw_shape(&self) -> Option<(u32, u32, u32)> {
        let l = &self.0;
        let i = l.iter().take_while(|&&c| c == Letter::U).count();
        let mut p = i;
        let mut j = 0;
        while p + 1 < l.len() && l[p] == Letter::D && l[p + 1] == Letter::U {
            j += 1;
            p += 2;
        }
        let k = l.len() - p;
        l[p..]
            .iter()
            .all(|&c| c == Letter::D)
            .then_some((i as u32, j, k as u32))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::U { 'u' } else { 'd' })?;
        }
        Ok(())
    }
}

/// Finite linear combination of words, without zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordCombination {
    field: Field,
    terms: BTreeMap<Word, FieldElement>,
}

impl WordCombination {
    pub fn zero(field: &Field) -> Self {
        WordCombination {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn word(field: &Field, w: Word) -> Self {
        let mut out = Self::zero(field);
        out.add_term(w, field.one());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> FieldElement {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &WordCombination) -> WordCombination {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Product in the free algebra.
    pub fn concat(&self, other: &WordCombination) -> WordCombination {
        let mut out = Self::zero(&self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Rewriting engine for the two defining relations with `γ = 0`.
#[derive(Clone, Debug)]
pub struct Rewriter {
    alpha: FieldElement,
    beta: FieldElement,
    strategy: Strategy,
}

impl Rewriter {
    pub fn new(alpha: FieldElement, beta: FieldElement) -> Self {
        Rewriter {
            alpha,
            beta,
            strategy: Strategy::Leftmost,
        }
    }

    pub fn for_algebra(a: &DownUp) -> Self {
        Self::new(a.alpha().clone(), a.beta().clone())
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// One rewrite at the redex chosen by the strategy, or `None` if normal.
    pub fn step(&self, w: &Word) -> Option<[(Word, FieldElement); 2]> {
        let p = match self.strategy {
            Strategy::Leftmost => w.redexes().next(),
            Strategy::Rightmost => w.redexes().last(),
        }?;
        let l = w.letters();
        let (a, b) = match l[p + 1] {
            // ddu -> α dud + β udd
            Letter::D => (
                [Letter::D, Letter::U, Letter::D],
                [Letter::U, Letter::D, Letter::D],
            ),
            // duu -> α udu + β uud
            Letter::U => (
                [Letter::U, Letter::D, Letter::U],
                [Letter::U, Letter::U, Letter::D],
            ),
        };
        let splice = |mid: [Letter; 3]| {
            let mut v = l[..p].to_vec();
            v.extend_from_slice(&mid);
            v.extend_from_slice(&l[p + 3..]);
            Word(v)
        };
        Some([
            (splice(a), self.alpha.clone()),
            (splice(b), self.beta.clone()),
        ])
    }

    pub fn reduce_word(&self, w: &Word) -> WordCombination {
        let mut c = WordCombination::zero(self.alpha.field());
        c.add_term(w.clone(), self.alpha.field().one());
        self.reduce_combination(&c)
    }

    /// Reduces to normal form. Words are processed by decreasing inversion
    /// count, so all contributions to a word are merged before it is rewritten.
    pub fn reduce_combination(&self, c: &WordCombination) -> WordCombination {
        let field = self.alpha.field();
        let mut pending: BTreeMap<(usize, Word), FieldElement> = BTreeMap::new();
        let push =
            |pending: &mut BTreeMap<(usize, Word), FieldElement>, w: Word, x: FieldElement| {
                if x.is_zero() {
                    return;
                }
                let key = (w.inversions(), w);
                match pending.get_mut(&key) {
                    Some(old) => *old = &*old + &x,
                    None => {
                        pending.insert(key, x);
                    }
                }
            };
        for (w, x) in c.terms() {
            push(&mut pending, w.clone(), x.clone());
        }
        let mut out = WordCombination::zero(field);
        while let Some(((_, w), x)) = pending.pop_last() {
            if x.is_zero() {
                continue;
            }
            match self.step(&w) {
                None => out.add_term(w, x),
                Some([(w1, c1), (w2, c2)]) => {
                    push(&mut pending, w1, &x * &c1);
                    push(&mut pending, w2, &x * &c2);
                }
            }
        }
        out
    }
}

/// Converts a reduced combination to the `u^i w^j d^k` basis, using
/// `du = (1/r1)·w - (β/r1)·ud`.
///
/// Panics if `c` contains a word that is not of the form `u^i (du)^j d^k`.
pub fn to_pbw_element(c: &WordCombination, a: &DownUp) -> AlgebraElement {
    let field = a.field();
    let r1_inv = a.r1().inv().expect("r1 is nonzero");
    let mut du = AlgebraElement::term(r1_inv.clone(), Monomial::W);
    du.add_term(Monomial::new(1, 0, 1), &-a.beta() * &r1_inv);
    let mut out = AlgebraElement::zero(field);
    for (w, x) in c.terms() {
        let (i, j, k) = w
            .pbw_shape()
            .unwrap_or_else(|| panic!("word {w} is not PBW-normal"));
        let e = a.mul_all(&[&a.mono(i, 0, 0), &a.pow(&du, j), &a.mono(0, 0, k)]);
        out.add_scaled(x, &e);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldSpec;

    fn f1() -> DownUp {
        let q = Field::rationals();
        DownUp::new(FieldSpec::new(q.from_i64(2), q.from_i64(3)).unwrap())
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reduce_ddu() {
        let a = f1();
        let r = Rewriter::for_algebra(&a);
        let got = r.reduce_word(&w("ddu"));
        let mut want = WordCombination::zero(a.field());
        want.add_term(w("dud"), a.alpha().clone());
        want.add_term(w("udd"), a.beta().clone());
        assert_eq!(got, want);
    }

    #[test]
    fn reduce_duu() {
        let a = f1();
        let r = Rewriter::for_algebra(&a);
        let got = r.reduce_word(&w("duu"));
        let mut want = WordCombination::zero(a.field());
        want.add_term(w("udu"), a.alpha().clone());
        want.add_term(w("uud"), a.beta().clone());
        assert_eq!(got, want);
    }

    #[test]
    fn normal_words_are_fixed() {
        let a = f1();
        let r = Rewriter::for_algebra(&a);
        assert_eq!(
            r.reduce_word(&w("ud")),
            WordCombination::word(a.field(), w("ud"))
        );
        let w1 = a.word_expansion(Monomial::W);
        assert_eq!(r.reduce_combination(&w1), w1);
    }

    #[test]
    fn linearity() {
        let a = f1();
        let r = Rewriter::for_algebra(&a);
        let mut c = WordCombination::zero(a.field());
        c.add_term(w("ud"), a.field().from_i64(2));
        c.add_term(w("ud"), a.field().from_i64(3));
        let mut want = WordCombination::zero(a.field());
        want.add_term(w("ud"), a.field().from_i64(5));
        assert_eq!(r.reduce_combination(&c), want);
    }

    #[test]
    fn w_u_skew_commutes_in_the_oracle() {
        let a = f1();
        let r = Rewriter::for_algebra(&a);
        let lhs = a
            .word_expansion(Monomial::W)
            .concat(&a.word_expansion(Monomial::U));
        let rhs = a.word_expansion(Monomial::new(1, 1, 0));
        let mut rhs_scaled = WordCombination::zero(a.field());
        for (word, c) in rhs.terms() {
            rhs_scaled.add_term(word.clone(), c * a.r1());
        }
        assert_eq!(
            r.reduce_combination(&lhs),
            r.reduce_combination(&rhs_scaled)
        );
    }

    #[test]
    fn word_expansions() {
        let a = f1();
        let q = a.field();
        assert_eq!(
            a.word_expansion(Monomial::new(1, 0, 1)),
            WordCombination::word(q, w("ud"))
        );
        let mut want = WordCombination::zero(q);
        want.add_term(w("udud"), q.from_i64(36));
        want.add_term(w("uddu"), q.from_i64(-12));
        want.add_term(w("duud"), q.from_i64(-12));
        want.add_term(w("dudu"), q.from_i64(4));
        assert_eq!(a.word_expansion(Monomial::new(0, 2, 0)), want);
    }

    #[test]
    fn du_converts() {
        let a = f1();
        let q = a.field();
        let got = to_pbw_element(&WordCombination::word(q, w("du")), &a);
        let mut want = AlgebraElement::term(q.from_ratio(1, 2), Monomial::W);
        want.add_term(Monomial::new(1, 0, 1), q.from_i64(3));
        assert_eq!(got, want);
        let got = to_pbw_element(&WordCombination::word(q, w("ud")), &a);
        assert_eq!(got, a.mono(1, 0, 1));
        let got = to_pbw_element(&WordCombination::word(q, w("dudu")), &a);
        let du = a.mul(&a.d(), &a.u());
        assert_eq!(got, a.mul(&du, &du));
    }

    #[test]
    fn shapes() {
        assert_eq!(w("uududdd").pbw_shape(), Some((2, 1, 3)));
        assert_eq!(w("").pbw_shape(), Some((0, 0, 0)));
        assert_eq!(w("duu").pbw_shape(), None);
        assert!(w("ududud").is_normal());
        assert!(!w("uddu").is_normal());
        assert_eq!(w("ddu").inversions(), 2);
    }
}
