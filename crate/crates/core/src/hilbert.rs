//! Cyclic pointed representations and the `k`-points of the Nori-Hilbert
//! scheme.
//!
//! A pair `(ρ, v)` is cyclic when `ρ(A)v = k^n`. Its left ideal
//! `I = ker(a ↦ ρ(a)v)` is a point of `Hilb_A^n`, and two cyclic pairs give
//! the same ideal exactly when they lie in one `GL_n` orbit. The ideal is
//! never materialized: it is encoded by the canonical form, the pair written
//! in the basis `ρ(w_1)v, …, ρ(w_n)v` of graded-lex-least words.

use num_traits::{One, Zero};

use crate::cohomology::tangent_space;
use crate::error::{Error, Result};
use crate::exactla::{span_rank, Rational, RationalMatrix};
use crate::ncalg::{NcPolynomial, Presentation, Word};
use crate::repscheme::{check_point, conjugate, require_valid, GroupElement, RepPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedRep {
    pub point: RepPoint,
    pub vector: Vec<Rational>,
}

impl PointedRep {
    pub fn new(point: RepPoint, vector: Vec<Rational>) -> Result<Self> {
        if vector.len() != point.n() {
            return Err(Error::Shape(format!(
                "vector of length {} for n = {}",
                vector.len(),
                point.n()
            )));
        }
        Ok(Self { point, vector })
    }

    /// `g·(ρ, v) = (ρ^g, g v)`.
    pub fn act(&self, g: &GroupElement) -> Result<Self> {
        Ok(Self {
            point: conjugate(&self.point, g)?,
            vector: g.matrix().mul_vec(&self.vector)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrylovSpan {
    pub dimension: usize,
    /// Greedy graded-lex basis words, in selection order.
    pub word_basis: Vec<Word>,
    /// `ρ(w)v` for each basis word.
    pub vectors: Vec<Vec<Rational>>,
}

/// Closes `span{v}` under the generators, selecting words greedily in
/// graded-lex order.
///
/// Candidates of length `d + 1` are `x_l·w` for selected `w` of length `d`;
/// any other word has an unselected suffix and is therefore already in the
/// span of smaller words.
pub fn krylov_span(presentation: &Presentation, pr: &PointedRep) -> Result<KrylovSpan> {
    require_valid(presentation, &pr.point)?;
    let n = pr.point.n();
    let mut word_basis = Vec::new();
    let mut vectors: Vec<Vec<Rational>> = Vec::new();
    if pr.vector.iter().all(Zero::is_zero) {
        return Ok(KrylovSpan {
            dimension: 0,
            word_basis,
            vectors,
        });
    }
    word_basis.push(Word::unit());
    vectors.push(pr.vector.clone());
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && vectors.len() < n {
        let mut candidates: Vec<(Word, Vec<Rational>)> = Vec::new();
        for &k in &frontier {
            for (l, x) in pr.point.matrices().iter().enumerate() {
                candidates.push((word_basis[k].prepend(l), x.mul_vec(&vectors[k])?));
            }
        }
        candidates.sort_by(|a, b| a.0.cmp(&b.0));
        let mut next = Vec::new();
        for (w, vec) in candidates {
            if vectors.len() == n {
                break;
            }
            vectors.push(vec);
            if span_rank(&vectors) == vectors.len() {
                word_basis.push(w);
                next.push(vectors.len() - 1);
            } else {
                vectors.pop();
            }
        }
        frontier = next;
    }
    Ok(KrylovSpan {
        dimension: vectors.len(),
        word_basis,
        vectors,
    })
}

pub fn is_cyclic(presentation: &Presentation, pr: &PointedRep) -> Result<bool> {
    Ok(krylov_span(presentation, pr)?.dimension == pr.point.n())
}

/// Orbit representative of a cyclic pair: the point written in the Krylov
/// word basis, so that the distinguished vector becomes `e₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub point: RepPoint,
    pub word_basis: Vec<Word>,
}

impl CanonicalForm {
    /// Always `e₁`.
    pub fn vector(&self) -> Vec<Rational> {
        let mut e = vec![Rational::zero(); self.point.n()];
        if let Some(first) = e.first_mut() {
            *first = Rational::one();
        }
        e
    }

    pub fn as_pointed(&self) -> PointedRep {
        PointedRep {
            point: self.point.clone(),
            vector: self.vector(),
        }
    }
}

pub fn hilb_canonical_form(presentation: &Presentation, pr: &PointedRep) -> Result<CanonicalForm> {
    let span = krylov_span(presentation, pr)?;
    let n = pr.point.n();
    if span.dimension < n {
        return Err(Error::NotCyclic {
            span: span.dimension,
            n,
        });
    }
    // columns are the Krylov vectors
    let basis = RationalMatrix::from_rows(span.vectors)?.transpose();
    let change = GroupElement::new(basis)?.inverse();
    Ok(CanonicalForm {
        point: conjugate(&pr.point, &change)?,
        word_basis: span.word_basis,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbDimension {
    pub dimension: usize,
    pub tangent_dim: usize,
    pub caveats: Vec<String>,
}

/// `dim T_{(ρ,v)} U_A^n − n²`: the free `GL_n` orbit is subtracted from the
/// tangent space of `Rep_A^n × A^n`.
pub fn hilb_dimension_at(presentation: &Presentation, pr: &PointedRep) -> Result<HilbDimension> {
    let n = pr.point.n();
    let span = krylov_span(presentation, pr)?;
    if span.dimension < n {
        return Err(Error::NotCyclic {
            span: span.dimension,
            n,
        });
    }
    let tangent_dim = tangent_space(presentation, &pr.point)?.dimension;
    Ok(HilbDimension {
        dimension: tangent_dim + n - n * n,
        tangent_dim,
        caveats: vec![
            "equals the local dimension of Hilb only where Rep is smooth at the point".into(),
        ],
    })
}

/// Adds the commutators `x_i x_j − x_j x_i` for all `i < j`.
pub fn abelianization(presentation: &Presentation) -> Result<Presentation> {
    let m = presentation.num_generators();
    let mut extra = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let (xi, xj) = (NcPolynomial::generator(i), NcPolynomial::generator(j));
            extra.push(xi.multiply(&xj).sub(&xj.multiply(&xi)));
        }
    }
    presentation.with_relations(extra)
}

/// Validity of a one-dimensional point, which must agree between the algebra
/// and its abelianization.
pub fn hilb1_points_check(presentation: &Presentation, point: &RepPoint) -> Result<bool> {
    if point.n() != 1 {
        return Err(Error::NotOneDimensional(point.n()));
    }
    let here = check_point(presentation, point)?.is_valid();
    let abelian = check_point(&abelianization(presentation)?, point)?.is_valid();
    assert_eq!(
        here, abelian,
        "one-dimensional representations factor through the abelianization"
    );
    Ok(here)
}
