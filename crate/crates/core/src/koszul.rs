//! The Hochschild chain and cochain complexes obtained from the Koszul
//! bimodule resolution, cut down to a single bidegree.
//!
//! Chains: `A⊗Ω → A⊗R → A⊗V → A` with `V = <u, d>`, `R = <d²u, du²>`,
//! `Ω = <d²u²>`. Cochains: `A → V*⊗A → R*⊗A → Ω*⊗A` with dual bases
//! `U, D`, `D²U, DU²`, `D²U²`. Every generator carries a bidegree so that all
//! differentials have bidegree zero; `D` sits in `(-1, 1)`, dual to `d`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{homology_dim, LinalgError, Matrix, Vector};
use crate::pbw::{graded_basis, AlgebraElement, Bidegree, DownUp, Monomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("differential {map} sends {source_label} outside the declared target: {detail}")]
    Inhomogeneous {
        map: &'static str,
        source_label: String,
        detail: String,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Tensor factor attached to an algebra element in a chain or cochain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorSymbol {
    AUnit,
    Vu,
    Vd,
    RD2u,
    RDu2,
    Omega,
    VStarU,
    VStarD,
    RStarD2U,
    RStarDU2,
    OmegaStar,
}

impl GeneratorSymbol {
    pub fn bidegree(self) -> Bidegree {
        use GeneratorSymbol::*;
        let (deg, sdeg) = match self {
            AUnit => (0, 0),
            Vu => (1, 1),
            Vd => (1, -1),
            RD2u => (3, -1),
            RDu2 => (3, 1),
            Omega => (4, 0),
            VStarU => (-1, -1),
            VStarD => (-1, 1),
            RStarD2U => (-3, 1),
            RStarDU2 => (-3, -1),
            OmegaStar => (-4, 0),
        };
        Bidegree::new(deg, sdeg)
    }

    pub fn tag(self) -> &'static str {
        use GeneratorSymbol::*;
        match self {
            AUnit => "A-unit",
            Vu => "V:u",
            Vd => "V:d",
            RD2u => "R:d²u",
            RDu2 => "R:du²",
            Omega => "Ω:d²u²",
            VStarU => "V*:U",
            VStarD => "V*:D",
            RStarD2U => "R*:D²U",
            RStarDU2 => "R*:DU²",
            OmegaStar => "Ω*:D²U²",
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A basis vector `generator ⊗ monomial` (or `generator | monomial` for cochains).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub symbol: GeneratorSymbol,
    pub monomial: Monomial,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.symbol, self.monomial)
    }
}

/// One bigraded component of a term of the complex, as a direct sum of
/// `symbol ⊗ A_(bidegree)` pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    parts: Vec<(GeneratorSymbol, Vec<Monomial>)>,
}

impl GradedSpace {
    /// Total bidegree `total`; for each symbol the algebra factor has
    /// bidegree `total - bideg(symbol)`.
    fn at(total: Bidegree, symbols: &[GeneratorSymbol]) -> Self {
        let parts = symbols
            .iter()
            .map(|&s| {
                let g = s.bidegree();
                (s, graded_basis(total.shift(-g.deg, -g.sdeg)))
            })
            .collect();
        GradedSpace { parts }
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(|(_, b)| b.len()).sum()
    }

    pub fn part_dim(&self, s: GeneratorSymbol) -> usize {
        self.parts
            .iter()
            .find(|(t, _)| *t == s)
            .map_or(0, |(_, b)| b.len())
    }

    pub fn labels(&self) -> Vec<Label> {
        self.parts
            .iter()
            .flat_map(|(s, b)| {
                b.iter().map(move |&m| Label {
                    symbol: *s,
                    monomial: m,
                })
            })
            .collect()
    }

    pub fn index_of(&self, l: Label) -> Option<usize> {
        let mut offset = 0;
        for (s, b) in &self.parts {
            if *s == l.symbol {
                return b.binary_search(&l.monomial).ok().map(|p| offset + p);
            }
            offset += b.len();
        }
        None
    }

    /// Coordinates of `Σ symbol ⊗ element`; fails if a term is not in this space.
    pub fn coordinates(
        &self,
        a: &DownUp,
        parts: &[(GeneratorSymbol, AlgebraElement)],
    ) -> Result<Vector, Label> {
        let mut v = vec![a.field().zero(); self.dim()];
        for (s, x) in parts {
            for (m, c) in x.terms() {
                let l = Label {
                    symbol: *s,
                    monomial: *m,
                };
                let p = self.index_of(l).ok_or(l)?;
                v[p] = &v[p] + c;
            }
        }
        Ok(v)
    }

    /// Inverse of [`GradedSpace::coordinates`], grouped by symbol.
    pub fn element(
        &self,
        a: &DownUp,
        v: &[crate::exactfield::FieldElement],
    ) -> Vec<(GeneratorSymbol, AlgebraElement)> {
        let mut out = Vec::new();
        let mut it = v.iter();
        for (s, b) in &self.parts {
            let mut x = AlgebraElement::zero(a.field());
            for m in b {
                x.add_term(*m, it.next().expect("vector length matches space").clone());
            }
            out.push((*s, x));
        }
        out
    }
}

/// A differential restricted to one bidegree, with labeled bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
    pub matrix: Matrix,
}

#[derive(Serialize)]
struct GradedMapJson {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<String>>,
}

impl Serialize for GradedMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GradedMapJson {
            rows: self.rows.iter().map(ToString::to_string).collect(),
            cols: self.cols.iter().map(ToString::to_string).collect(),
            entries: (0..self.matrix.rows())
                .map(|r| self.matrix.row(r).iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

type Image = Vec<(GeneratorSymbol, AlgebraElement)>;

fn assemble(
    a: &DownUp,
    name: &'static str,
    source: &GradedSpace,
    target: &GradedSpace,
    image: impl Fn(GeneratorSymbol, &AlgebraElement) -> Image,
) -> Result<GradedMap, KoszulError> {
    let cols = source.labels();
    let columns = cols
        .iter()
        .map(|l| {
            let x = AlgebraElement::monomial(a.field(), l.monomial);
            target
                .coordinates(a, &image(l.symbol, &x))
                .map_err(|bad| KoszulError::Inhomogeneous {
                    map: name,
                    source_label: l.to_string(),
                    detail: format!("term {bad}"),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedMap {
        rows: target.labels(),
        cols,
        matrix: Matrix::from_columns(a.field(), target.dim(), &columns),
    })
}

/// Small expression helper around the algebra's product.
struct Ops<'a> {
    a: &'a DownUp,
    u: AlgebraElement,
    d: AlgebraElement,
}

impl<'a> Ops<'a> {
    fn new(a: &'a DownUp) -> Self {
        Ops {
            a,
            u: a.u(),
            d: a.d(),
        }
    }

    fn p(&self, factors: &[&AlgebraElement]) -> AlgebraElement {
        self.a.mul_all(factors)
    }

    /// `Σ c_i · x_i`
    fn lin(&self, terms: &[(&crate::exactfield::FieldElement, AlgebraElement)]) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.a.field());
        for (c, x) in terms {
            out.add_scaled(c, x);
        }
        out
    }
}

use GeneratorSymbol::*;

/// The four components `(A⊗Ω, A⊗R, A⊗V, A)` of the chain complex at `b`.
pub fn homology_spaces(b: Bidegree) -> [GradedSpace; 4] {
    [
        GradedSpace::at(b, &[Omega]),
        GradedSpace::at(b, &[RD2u, RDu2]),
        GradedSpace::at(b, &[Vu, Vd]),
        GradedSpace::at(b, &[AUnit]),
    ]
}

/// The four components `(A, V*⊗A, R*⊗A, Ω*⊗A)` of the cochain complex at `b`.
pub fn cohomology_spaces(b: Bidegree) -> [GradedSpace; 4] {
    [
        GradedSpace::at(b, &[AUnit]),
        GradedSpace::at(b, &[VStarU, VStarD]),
        GradedSpace::at(b, &[RStarD2U, RStarDU2]),
        GradedSpace::at(b, &[OmegaStar]),
    ]
}

/// `d1(a⊗d + a'⊗u) = ad - da + a'u - ua'`.
pub fn assemble_d1(a: &DownUp, b: Bidegree) -> Result<GradedMap, KoszulError> {
    let [_, _, v, alg] = homology_spaces(b);
    let o = Ops::new(a);
    assemble(a, "d1", &v, &alg, |s, x| {
        let y = match s {
            Vd => o.p(&[x, &o.d]).sub(&o.p(&[&o.d, x])),
            Vu => o.p(&[x, &o.u]).sub(&o.p(&[&o.u, x])),
            _ => unreachable!(),
        };
        vec![(AUnit, y)]
    })
}

/// `d2` from `A⊗R` to `A⊗V`, with the `γ` terms absent.
pub fn assemble_d2(a: &DownUp, b: Bidegree) -> Result<GradedMap, KoszulError> {
    let [_, r, v, _] = homology_spaces(b);
    let o = Ops::new(a);
    let one = a.field().one();
    let (al, be) = (-a.alpha(), -a.beta());
    let (u, d) = (&o.u, &o.d);
    assemble(a, "d2", &r, &v, |s, x| match s {
        RD2u => {
            let dpart = o.lin(&[
                (&one, o.p(&[d, u, x])),
                (&one, o.p(&[u, x, d])),
                (&al, o.p(&[u, d, x])),
                (&al, o.p(&[x, d, u])),
                (&be, o.p(&[d, x, u])),
                (&be, o.p(&[x, u, d])),
            ]);
            let upart = o.lin(&[
                (&one, o.p(&[x, d, d])),
                (&al, o.p(&[d, x, d])),
                (&be, o.p(&[d, d, x])),
            ]);
            vec![(Vd, dpart), (Vu, upart)]
        }
        RDu2 => {
            let dpart = o.lin(&[
                (&one, o.p(&[u, u, x])),
                (&al, o.p(&[u, x, u])),
                (&be, o.p(&[x, u, u])),
            ]);
            let upart = o.lin(&[
                (&one, o.p(&[u, x, d])),
                (&one, o.p(&[x, d, u])),
                (&al, o.p(&[d, u, x])),
                (&al, o.p(&[x, u, d])),
                (&be, o.p(&[u, d, x])),
                (&be, o.p(&[d, x, u])),
            ]);
            vec![(Vd, dpart), (Vu, upart)]
        }
        _ => unreachable!(),
    })
}

/// `d3(a⊗d²u²) = -(ua + βau)⊗d²u + (ad + βda)⊗du²`.
pub fn assemble_d3(a: &DownUp, b: Bidegree) -> Result<GradedMap, KoszulError> {
    let [om, r, _, _] = homology_spaces(b);
    let o = Ops::new(a);
    let (one, mone, be) = (a.field().one(), -a.field().one(), a.beta().clone());
    let mbe = -&be;
    assemble(a, "d3", &om, &r, |_, x| {
        let first = o.lin(&[(&mone, o.p(&[&o.u, x])), (&mbe, o.p(&[x, &o.u]))]);
        let second = o.lin(&[(&one, o.p(&[x, &o.d])), (&be, o.p(&[&o.d, x]))]);
        vec![(RD2u, first), (RDu2, second)]
    })
}

/// `d0*(a) = U|(ua - au) + D|(da - ad)`.
pub fn assemble_d0star(a: &DownUp, b: Bidegree) -> Result<GradedMap, KoszulError> {
    let [c0, c1, _, _] = cohomology_spaces(b);
    let o = Ops::new(a);
    assemble(a, "d0*", &c0, &c1, |_, x| {
        vec![
            (VStarU, o.p(&[&o.u, x]).sub(&o.p(&[x, &o.u]))),
            (VStarD, o.p(&[&o.d, x]).sub(&o.p(&[x, &o.d]))),
        ]
    })
}

/// `d1*(U|a + D|a') = D²U|Δ1 + DU²|Δ2`, with the `γ` terms absent.
pub fn assemble_d1star(a: &DownUp, b: Bidegree) -> Result<GradedMap, KoszulError> {
    let [_, c1, c2, _] = cohomology_spaces(b);
    let o = Ops::new(a);
    let one = a.field().one();
    let (al, be) = (-a.alpha(), -a.beta());
    let (u, d) = (&o.u, &o.d);
    assemble(a, "d1*", &c1, &c2, |s, x| match s {
        VStarU => {
            let delta1 = o.lin(&[
                (&one, o.p(&[d, d, x])),
                (&al, o.p(&[d, x, d])),
                (&be, o.p(&[x, d, d])),
            ]);
            let delta2 = o.lin(&[
                (&one, o.p(&[d, x, u])),
                (&one, o.p(&[d, u, x])),
                (&al, o.p(&[x, d, u])),
                (&al, o.p(&[u, d, x])),
                (&be, o.p(&[x, u, d])),
                (&be, o.p(&[u, x, d])),
            ]);
            vec![(RStarD2U, delta1), (RStarDU2, delta2)]
        }
        VStarD => {
            let delta1 = o.lin(&[
                (&one, o.p(&[x, d, u])),
                (&one, o.p(&[d, x, u])),
                (&al, o.p(&[x, u, d])),
                (&al, o.p(&[d, u, x])),
                (&be, o.p(&[u, x, d])),
                (&be, o.p(&[u, d, x])),
            ]);
            let delta2 = o.lin(&[
                (&one, o.p(&[x, u, u])),
                (&al, o.p(&[u, x, u])),
                (&be, o.p(&[u, u, x])),
            ]);
            vec![(RStarD2U, delta1), (RStarDU2, delta2)]
        }
        _ => unreachable!(),
    })
}

/// `d2*(D²U|a + DU²|a') = D²U²|(da' + βa'd - au - βua)`.
pub fn assemble_d2star(a: &DownUp, b: Bidegree) -> Result<GradedMap, KoszulError> {
    let [_, _, c2, c3] = cohomology_spaces(b);
    let o = Ops::new(a);
    let (one, mone, be) = (a.field().one(), -a.field().one(), a.beta().clone());
    let mbe = -&be;
    assemble(a, "d2*", &c2, &c3, |s, x| {
        let y = match s {
            RStarD2U => o.lin(&[(&mone, o.p(&[x, &o.u])), (&mbe, o.p(&[&o.u, x]))]),
            RStarDU2 => o.lin(&[(&one, o.p(&[&o.d, x])), (&be, o.p(&[x, &o.d]))]),
            _ => unreachable!(),
        };
        vec![(OmegaStar, y)]
    })
}

/// Which complex a [`BidegreeComplex`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theory {
    Homology,
    Cohomology,
}

/// All three differentials of one complex at one bidegree.
///
/// `spaces[i]` is the term of (co)homological degree `i`; for homology
/// `maps[i]` is `d_{i+1}: C_{i+1} → C_i`, for cohomology `maps[i]` is
/// `d_i*: C^i → C^{i+1}`.
#[derive(Clone, Debug)]
pub struct BidegreeComplex {
    pub theory: Theory,
    pub bidegree: Bidegree,
    pub spaces: [GradedSpace; 4],
    pub maps: [GradedMap; 3],
}

impl BidegreeComplex {
    pub fn homology(a: &DownUp, b: Bidegree) -> Result<Self, KoszulError> {
        let [om, r, v, alg] = homology_spaces(b);
        Ok(BidegreeComplex {
            theory: Theory::Homology,
            bidegree: b,
            spaces: [alg, v, r, om],
            maps: [assemble_d1(a, b)?, assemble_d2(a, b)?, assemble_d3(a, b)?],
        })
    }

    pub fn cohomology(a: &DownUp, b: Bidegree) -> Result<Self, KoszulError> {
        Ok(BidegreeComplex {
            theory: Theory::Cohomology,
            bidegree: b,
            spaces: cohomology_spaces(b),
            maps: [
                assemble_d0star(a, b)?,
                assemble_d1star(a, b)?,
                assemble_d2star(a, b)?,
            ],
        })
    }

    pub fn build(theory: Theory, a: &DownUp, b: Bidegree) -> Result<Self, KoszulError> {
        match theory {
            Theory::Homology => Self::homology(a, b),
            Theory::Cohomology => Self::cohomology(a, b),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(|s| s.dim() == 0)
    }

    /// The map leaving `C_i` (homology) or `C^i` (cohomology), zero at the ends.
    pub fn outgoing(&self, i: usize) -> Matrix {
        let field = self.maps[0].matrix.field();
        match self.theory {
            Theory::Homology if i == 0 => Matrix::zeros(field, 0, self.spaces[0].dim()),
            Theory::Homology => self.maps[i - 1].matrix.clone(),
            Theory::Cohomology if i == 3 => Matrix::zeros(field, 0, self.spaces[3].dim()),
            Theory::Cohomology => self.maps[i].matrix.clone(),
        }
    }

    /// The map arriving at `C_i` / `C^i`, zero at the ends.
    pub fn incoming(&self, i: usize) -> Matrix {
        let field = self.maps[0].matrix.field();
        match self.theory {
            Theory::Homology if i == 3 => Matrix::zeros(field, self.spaces[3].dim(), 0),
            Theory::Homology => self.maps[i].matrix.clone(),
            Theory::Cohomology if i == 0 => Matrix::zeros(field, self.spaces[0].dim(), 0),
            Theory::Cohomology => self.maps[i - 1].matrix.clone(),
        }
    }

    /// `dim H_i` (or `H^i`) for `i = 0..=3`.
    pub fn dims(&self) -> Result<[usize; 4], LinalgError> {
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = homology_dim(&self.incoming(i), &self.outgoing(i))?;
        }
        Ok(out)
    }

    /// Whether consecutive differentials compose to zero.
    pub fn squares_to_zero(&self) -> Result<bool, LinalgError> {
        let [m0, m1, m2] = &self.maps;
        let (first, second) = match self.theory {
            // d1∘d2, d2∘d3
            Theory::Homology => (m0.matrix.mul(&m1.matrix)?, m1.matrix.mul(&m2.matrix)?),
            // d1*∘d0*, d2*∘d1*
            Theory::Cohomology => (m1.matrix.mul(&m0.matrix)?, m2.matrix.mul(&m1.matrix)?),
        };
        Ok(first.is_zero() && second.is_zero())
    }
}
