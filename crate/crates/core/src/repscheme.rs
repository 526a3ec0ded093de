//! The affine scheme `Rep_A^n` of `n`-dimensional representations.
//!
//! A presentation `A = k⟨x_1..x_m⟩/J` cuts `Rep_A^n` out of the space of
//! `m`-tuples of `n×n` matrices by the entries of every relation evaluated
//! at the generic matrices `ξ_l = (ξ_{l,i,j})`. Points are `m`-tuples of
//! rational matrices; `GL_n` acts on them by simultaneous conjugation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{kernel, Rational, RationalMatrix};
use crate::ncalg::{NcPolynomial, Presentation, Word};

/// Default number of random combinations tried by [`module_isomorphic`].
pub const DEFAULT_ISO_TRIES: usize = 32;

/// The coordinate `ξ_{l,i,j}`: entry `(i, j)` of the generic matrix of
/// generator `l`. Indices are zero-based; display is one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenericVariable {
    pub generator: usize,
    pub row: usize,
    pub col: usize,
}

impl GenericVariable {
    pub fn new(generator: usize, row: usize, col: usize) -> Self {
        Self { generator, row, col }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let name = names
            .get(self.generator)
            .map_or_else(|| self.generator.to_string(), Clone::clone);
        format!("xi[{name},{},{}]", self.row + 1, self.col + 1)
    }
}

/// A commutative monomial: variables in increasing order with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(GenericVariable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: GenericVariable) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(GenericVariable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut merged: BTreeMap<GenericVariable, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *merged.entry(v).or_insert(0) += e;
        }
        Self(merged.into_iter().collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the commuting variables `ξ_{l,i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CommPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl CommPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: GenericVariable) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&m).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.multiply(b), c * d);
            }
        }
        out
    }

    /// Evaluates at the coordinates of a point.
    pub fn evaluate(&self, point: &RepPoint) -> Rational {
        self.evaluate_with(|v| point.coordinate(v))
    }

    pub fn evaluate_with(&self, mut coord: impl FnMut(GenericVariable) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.factors() {
                let x = coord(v);
                for _ in 0..e {
                    term *= &x;
                }
            }
            total += term;
        }
        total
    }

    /// Renders as `c * xi[x,1,2] * xi[y,2,1]^2 + ...`; the zero polynomial is `0`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = *c < Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&magnitude.to_string());
            for &(v, e) in m.factors() {
                out.push_str(" * ");
                out.push_str(&v.display_with(names));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

/// One emitted generator of the ideal of `Rep_A^n`, labeled by the relation
/// and the (zero-based) matrix entry it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerator {
    pub relation: usize,
    pub row: usize,
    pub col: usize,
    pub polynomial: CommPolynomial,
}

type GenericMatrix = Vec<CommPolynomial>;

fn generic_product(a: &GenericMatrix, b: &GenericMatrix, n: usize) -> GenericMatrix {
    let mut out = vec![CommPolynomial::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j].add_assign(&x.multiply(y));
                }
            }
        }
    }
    out
}

/// The `r·n²` entries of each relation evaluated at the generic matrices,
/// ordered by relation then row-major entry. Nothing is reduced: zero and
/// duplicate generators are kept.
pub fn emit_ideal_generators(presentation: &Presentation, n: usize) -> Result<Vec<IdealGenerator>> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    let m = presentation.num_generators();
    let generic: Vec<GenericMatrix> = (0..m)
        .map(|l| {
            (0..n * n)
                .map(|k| CommPolynomial::var(GenericVariable::new(l, k / n, k % n)))
                .collect()
        })
        .collect();
    let identity: GenericMatrix = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                CommPolynomial::constant(Rational::one())
            } else {
                CommPolynomial::zero()
            }
        })
        .collect();
    let mut cache: BTreeMap<Word, GenericMatrix> = BTreeMap::new();
    cache.insert(Word::unit(), identity);

    let mut out = Vec::with_capacity(presentation.num_relations() * n * n);
    for (ri, relation) in presentation.relations().iter().enumerate() {
        let mut acc = vec![CommPolynomial::zero(); n * n];
        for (w, c) in relation.terms() {
            let value = generic_word(w, &generic, &mut cache, n);
            for (slot, v) in acc.iter_mut().zip(&value) {
                slot.add_scaled(v, c);
            }
        }
        for (k, polynomial) in acc.into_iter().enumerate() {
            out.push(IdealGenerator {
                relation: ri,
                row: k / n,
                col: k % n,
                polynomial,
            });
        }
    }
    Ok(out)
}

fn generic_word(
    w: &Word,
    generic: &[GenericMatrix],
    cache: &mut BTreeMap<Word, GenericMatrix>,
    n: usize,
) -> GenericMatrix {
    if let Some(v) = cache.get(w) {
        return v.clone();
    }
    let (&last, init) = w.letters().split_last().expect("unit word is cached");
    let head = generic_word(&Word::new(init.to_vec()), generic, cache, n);
    let value = generic_product(&head, &generic[last], n);
    cache.insert(w.clone(), value.clone());
    value
}

/// A rational point of `Rep^n`: the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepPoint {
    n: usize,
    matrices: Vec<RationalMatrix>,
}

impl RepPoint {
    pub fn new(n: usize, matrices: Vec<RationalMatrix>) -> Result<Self> {
        if let Some(bad) = matrices.iter().position(|x| x.rows() != n || x.cols() != n) {
            return Err(Error::Shape(format!(
                "matrix {bad} is {}x{}, expected {n}x{n}",
                matrices[bad].rows(),
                matrices[bad].cols()
            )));
        }
        Ok(Self { n, matrices })
    }

    /// Reassembles a point from coordinate values; missing coordinates are zero.
    pub fn from_coordinates(n: usize, m: usize, coords: &BTreeMap<GenericVariable, Rational>) -> Self {
        let matrices = (0..m)
            .map(|l| {
                let mut x = RationalMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        if let Some(v) = coords.get(&GenericVariable::new(l, i, j)) {
                            x[(i, j)] = v.clone();
                        }
                    }
                }
                x
            })
            .collect();
        Self { n, matrices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_generators(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, l: usize) -> &RationalMatrix {
        &self.matrices[l]
    }

    pub fn coordinate(&self, v: GenericVariable) -> Rational {
        self.matrices[v.generator][(v.row, v.col)].clone()
    }

    pub fn coordinates(&self) -> BTreeMap<GenericVariable, Rational> {
        let mut out = BTreeMap::new();
        for (l, x) in self.matrices.iter().enumerate() {
            for i in 0..self.n {
                for j in 0..self.n {
                    out.insert(GenericVariable::new(l, i, j), x[(i, j)].clone());
                }
            }
        }
        out
    }

    fn check_arity(&self, presentation: &Presentation) -> Result<()> {
        if self.matrices.len() != presentation.num_generators() {
            return Err(Error::Shape(format!(
                "point has {} matrices but the algebra has {} generators",
                self.matrices.len(),
                presentation.num_generators()
            )));
        }
        Ok(())
    }
}

/// `f(ρ(x_1), …, ρ(x_m))`.
pub fn evaluate(f: &NcPolynomial, point: &RepPoint) -> Result<RationalMatrix> {
    if let Some(l) = f.max_letter().filter(|&l| l >= point.num_generators()) {
        return Err(Error::GeneratorIndex {
            index: l,
            count: point.num_generators(),
        });
    }
    if point.matrices.is_empty() {
        // only constants can occur
        return Ok(RationalMatrix::identity(point.n).scale(&f.coefficient(&Word::unit())));
    }
    f.substitute(&point.matrices)
}

/// A relation that fails at a point, with its first nonzero entry (row-major,
/// zero-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: usize,
    pub row: usize,
    pub col: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointVerdict {
    Valid,
    Violations(Vec<Violation>),
}

impl PointVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, PointVerdict::Valid)
    }
}

pub fn check_point(presentation: &Presentation, point: &RepPoint) -> Result<PointVerdict> {
    point.check_arity(presentation)?;
    let mut violations = Vec::new();
    for (ri, rel) in presentation.relations().iter().enumerate() {
        let value = evaluate(rel, point)?;
        if let Some((row, col, v)) = value.first_nonzero() {
            violations.push(Violation {
                relation: ri,
                row,
                col,
                value: v.clone(),
            });
        }
    }
    Ok(if violations.is_empty() {
        PointVerdict::Valid
    } else {
        PointVerdict::Violations(violations)
    })
}

/// Errors with the first violation unless the point is valid.
pub fn require_valid(presentation: &Presentation, point: &RepPoint) -> Result<()> {
    match check_point(presentation, point)? {
        PointVerdict::Valid => Ok(()),
        PointVerdict::Violations(v) => {
            let first = &v[0];
            Err(Error::InvalidPoint {
                relation: first.relation,
                row: first.row,
                col: first.col,
                value: first.value.to_string(),
            })
        }
    }
}

/// An element of `GL_n(ℚ)` with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    g: RationalMatrix,
    inverse: RationalMatrix,
}

impl GroupElement {
    pub fn new(g: RationalMatrix) -> Result<Self> {
        if !g.is_square() {
            return Err(Error::Shape("group element must be square".into()));
        }
        let inverse = g.inverse().ok_or(Error::Singular)?;
        Ok(Self { g, inverse })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            g: RationalMatrix::identity(n),
            inverse: RationalMatrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.g
    }

    pub fn inverse(&self) -> GroupElement {
        Self {
            g: self.inverse.clone(),
            inverse: self.g.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }
}

/// `ρ^g(a) = g ρ(a) g⁻¹`.
pub fn conjugate(point: &RepPoint, g: &GroupElement) -> Result<RepPoint> {
    if g.n() != point.n {
        return Err(Error::Shape(format!(
            "group element of size {} acting on n = {}",
            g.n(),
            point.n
        )));
    }
    let matrices = point
        .matrices
        .iter()
        .map(|x| g.g.try_mul(x)?.try_mul(&g.inverse))
        .collect::<Result<Vec<_>>>()?;
    Ok(RepPoint { n: point.n, matrices })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// `q = g p g⁻¹` for the witness `g`.
    Isomorphic { witness: RationalMatrix },
    NotIsomorphic,
    Inconclusive { tries: usize },
}

/// Matrix of `T ↦ (T·p_l − q_l·T)_l` on row-major `vec(T)`.
fn intertwiner_system(p: &RepPoint, q: &RepPoint) -> RationalMatrix {
    let n = p.n;
    let m = p.matrices.len();
    let mut sys = RationalMatrix::zeros(m * n * n, n * n);
    for l in 0..m {
        let (pl, ql) = (&p.matrices[l], &q.matrices[l]);
        for i in 0..n {
            for j in 0..n {
                let row = l * n * n + i * n + j;
                for k in 0..n {
                    sys[(row, i * n + k)] += &pl[(k, j)];
                    sys[(row, k * n + j)] -= &ql[(i, k)];
                }
            }
        }
    }
    sys
}

fn as_square(v: &[Rational], n: usize) -> RationalMatrix {
    RationalMatrix::from_vec(n, n, v.to_vec()).expect("n² entries")
}

/// Decides whether two points define isomorphic modules by searching the
/// intertwiner space for an invertible element: the kernel basis first, then
/// `tries` seeded random integer combinations.
pub fn module_isomorphic(
    presentation: &Presentation,
    p: &RepPoint,
    q: &RepPoint,
    seed: u64,
    tries: usize,
) -> Result<IsoVerdict> {
    if p.n != q.n {
        return Err(Error::Shape(format!("dimensions {} and {} differ", p.n, q.n)));
    }
    require_valid(presentation, p)?;
    require_valid(presentation, q)?;
    let n = p.n;
    if p == q {
        return Ok(IsoVerdict::Isomorphic {
            witness: RationalMatrix::identity(n),
        });
    }
    let space = kernel(&intertwiner_system(p, q));
    if space.dimension == 0 {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    for v in &space.basis_vectors {
        let t = as_square(v, n);
        if t.rank() == n {
            return Ok(IsoVerdict::Isomorphic { witness: t });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let mut combo = vec![Rational::zero(); n * n];
        for v in &space.basis_vectors {
            let c = Rational::from_integer(rng.gen_range(-5i64..=5).into());
            for (s, x) in combo.iter_mut().zip(v) {
                *s += &c * x;
            }
        }
        let t = as_square(&combo, n);
        if t.rank() == n {
            return Ok(IsoVerdict::Isomorphic { witness: t });
        }
    }
    Ok(IsoVerdict::Inconclusive { tries })
}

impl fmt::Display for RepPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (l, x) in self.matrices.iter().enumerate() {
            if l > 0 {
                writeln!(f)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::ncalg::NcPolynomial;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn commutator() -> NcPolynomial {
        let x = NcPolynomial::generator(0);
        let y = NcPolynomial::generator(1);
        x.multiply(&y).sub(&y.multiply(&x))
    }

    fn comm2() -> Presentation {
        Presentation::new(names(&["x", "y"]), vec![commutator()]).unwrap()
    }

    fn dual() -> Presentation {
        Presentation::new(names(&["x"]), vec![NcPolynomial::generator(0).pow(2)]).unwrap()
    }

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_ints(rows)
    }

    #[test]
    fn ideal_of_free_algebra_is_empty() {
        let p = Presentation::free(["x", "y"]).unwrap();
        for n in 1..4 {
            assert!(emit_ideal_generators(&p, n).unwrap().is_empty());
        }
    }

    #[test]
    fn ideal_of_commuting_scheme() {
        let gens = emit_ideal_generators(&comm2(), 2).unwrap();
        assert_eq!(gens.len(), 4);
        // symbolic oracle: (XY - YX)_{11} = X12 Y21 - Y12 X21
        let x12 = GenericVariable::new(0, 0, 1);
        let x21 = GenericVariable::new(0, 1, 0);
        let y12 = GenericVariable::new(1, 0, 1);
        let y21 = GenericVariable::new(1, 1, 0);
        let mut expected = CommPolynomial::var(x12).multiply(&CommPolynomial::var(y21));
        expected.add_scaled(
            &CommPolynomial::var(y12).multiply(&CommPolynomial::var(x21)),
            &int(-1),
        );
        assert_eq!((gens[0].relation, gens[0].row, gens[0].col), (0, 0, 0));
        assert_eq!(gens[0].polynomial, expected);
        assert_eq!(
            gens[0].polynomial.display_with(&names(&["x", "y"])),
            "1 * xi[x,1,2] * xi[y,2,1] - 1 * xi[x,2,1] * xi[y,1,2]"
        );
    }

    #[test]
    fn ideal_one_by_one_square() {
        let gens = emit_ideal_generators(&dual(), 1).unwrap();
        assert_eq!(gens.len(), 1);
        let mut expected = CommPolynomial::zero();
        expected.add_term(
            Monomial(vec![(GenericVariable::new(0, 0, 0), 2)]),
            int(1),
        );
        assert_eq!(gens[0].polynomial, expected);
    }

    #[test]
    fn evaluate_examples() {
        let p = RepPoint::new(2, vec![m(&[&[1, 0], &[0, 2]]), m(&[&[3, 0], &[0, 5]])]).unwrap();
        assert!(evaluate(&commutator(), &p).unwrap().is_zero());
        assert_eq!(evaluate(&NcPolynomial::generator(0), &p).unwrap(), *p.matrix(0));

        let q = RepPoint::new(2, vec![m(&[&[0, 1], &[0, 0]]), m(&[&[0, 0], &[1, 0]])]).unwrap();
        assert_eq!(evaluate(&commutator(), &q).unwrap(), m(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn check_point_examples() {
        let q = RepPoint::new(2, vec![m(&[&[0, 1], &[0, 0]]), m(&[&[0, 0], &[1, 0]])]).unwrap();
        let free = Presentation::free(["x", "y"]).unwrap();
        assert_eq!(check_point(&free, &q).unwrap(), PointVerdict::Valid);
        assert_eq!(
            check_point(&comm2(), &q).unwrap(),
            PointVerdict::Violations(vec![Violation {
                relation: 0,
                row: 0,
                col: 0,
                value: int(1)
            }])
        );
        let zero = RepPoint::new(1, vec![m(&[&[0]])]).unwrap();
        assert!(check_point(&dual(), &zero).unwrap().is_valid());
        assert!(check_point(&comm2(), &zero).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let p = RepPoint::new(2, vec![m(&[&[1, 0], &[0, 2]])]).unwrap();
        assert_eq!(conjugate(&p, &GroupElement::identity(2)).unwrap(), p);
        let swap = GroupElement::new(m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(
            conjugate(&p, &swap).unwrap().matrix(0),
            &m(&[&[2, 0], &[0, 1]])
        );
        let g = GroupElement::new(m(&[&[1, 2], &[0, 1]])).unwrap();
        let back = conjugate(&conjugate(&p, &g).unwrap(), &g.inverse()).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            GroupElement::new(m(&[&[1, 2], &[2, 4]])).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn isomorphism_examples() {
        let free1 = Presentation::free(["x"]).unwrap();
        let p = RepPoint::new(2, vec![m(&[&[1, 1], &[0, 2]])]).unwrap();
        assert_eq!(
            module_isomorphic(&free1, &p, &p, 0, DEFAULT_ISO_TRIES).unwrap(),
            IsoVerdict::Isomorphic {
                witness: RationalMatrix::identity(2)
            }
        );
        let a = RepPoint::new(1, vec![m(&[&[1]])]).unwrap();
        let b = RepPoint::new(1, vec![m(&[&[2]])]).unwrap();
        assert_eq!(
            module_isomorphic(&free1, &a, &b, 0, DEFAULT_ISO_TRIES).unwrap(),
            IsoVerdict::NotIsomorphic
        );
        let g = GroupElement::new(m(&[&[2, 1], &[1, 1]])).unwrap();
        let q = conjugate(&p, &g).unwrap();
        match module_isomorphic(&free1, &p, &q, 0, DEFAULT_ISO_TRIES).unwrap() {
            IsoVerdict::Isomorphic { witness } => {
                let h = GroupElement::new(witness).unwrap();
                assert_eq!(conjugate(&p, &h).unwrap(), q);
            }
            other => panic!("expected isomorphic, got {other:?}"),
        }
        // Jordan block vs. diagonal with the same eigenvalue: not isomorphic
        let j = RepPoint::new(2, vec![m(&[&[1, 1], &[0, 1]])]).unwrap();
        let d = RepPoint::new(2, vec![m(&[&[1, 0], &[0, 1]])]).unwrap();
        assert!(!matches!(
            module_isomorphic(&free1, &j, &d, 0, DEFAULT_ISO_TRIES).unwrap(),
            IsoVerdict::Isomorphic { .. }
        ));
    }

    #[test]
    fn coordinates_roundtrip() {
        let p = RepPoint::new(2, vec![m(&[&[1, 2], &[3, 4]]), m(&[&[0, 0], &[0, 1]])]).unwrap();
        let q = RepPoint::from_coordinates(2, 2, &p.coordinates());
        assert_eq!(p, q);
        assert_eq!(p.coordinate(GenericVariable::new(0, 1, 0)), int(3));
    }
}
