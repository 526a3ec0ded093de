//! Exact linear algebra over the rationals and over the dual numbers.
//!
//! Every rank, kernel and dimension reported elsewhere in the crate goes
//! through [`rref`]. Elimination is fraction free: rows are kept as
//! primitive integer vectors (coprime entries) between steps and only the
//! final pivot normalization produces fractions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Self::from_vec(n, cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| int(v))).collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// The matrix unit with a single one at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Rational)> {
        self.data
            .iter()
            .position(|v| !v.is_zero())
            .map(|k| (k / self.cols, k % self.cols, &self.data[k]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(cols: usize, blocks: &[Self]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape("vstack column mismatch".into()));
            }
            rows += b.rows;
            data.extend_from_slice(&b.data);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let red = rref(&aug);
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Makes an integer row primitive: entries coprime, first nonzero entry positive.
fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if g.is_zero() {
        return;
    }
    let negate = row.iter().find(|v| !v.is_zero()).is_some_and(Signed::is_negative);
    for v in row.iter_mut() {
        *v = &*v / &g;
        if negate {
            *v = -&*v;
        }
    }
}

/// Clears denominators of a rational row.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

/// Reduced row-echelon form with leftmost-column, topmost-row pivoting.
pub fn rref(m: &RationalMatrix) -> Rref {
    let (rows, cols) = (m.rows, m.cols);
    let mut work: Vec<Vec<BigInt>> = (0..rows).map(|i| integer_row(m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let (before, rest) = work.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row present");
        for other in before.iter_mut().chain(after.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&other[c]);
            let a = &pivot_row[c] / &g;
            let b = &other[c] / &g;
            for (o, pv) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                *o = &a * &*o - &b * pv;
            }
            for o in other.iter_mut().take(c) {
                *o = &a * &*o;
            }
            make_primitive(other);
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = RationalMatrix::zeros(rows, cols);
    for (i, row) in work.iter().enumerate() {
        if let Some(&pc) = pivots.get(i) {
            let lead = row[pc].clone();
            for j in 0..cols {
                if !row[j].is_zero() {
                    out[(i, j)] = Rational::new(row[j].clone(), lead.clone());
                }
            }
        }
    }
    Rref {
        matrix: out,
        rank: pivots.len(),
        pivots,
    }
}

/// Basis of a null space: one vector per non-pivot column, carrying a one in
/// that column and zeros in every other non-pivot column, ordered by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub dimension: usize,
    pub basis_vectors: Vec<Vec<Rational>>,
}

pub fn kernel(m: &RationalMatrix) -> KernelBasis {
    let red = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let basis_vectors: Vec<Vec<Rational>> = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (i, &p) in red.pivots.iter().enumerate() {
                v[p] = -red.matrix[(i, free)].clone();
            }
            v
        })
        .collect();
    KernelBasis {
        dimension: basis_vectors.len(),
        basis_vectors,
    }
}

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// A solution with every non-pivot variable set to zero.
    Solved(Vec<Rational>),
    /// A row combination `y` with `yᵀM = 0` and `yᵀ·target ≠ 0`.
    Inconsistent { certificate: Vec<Rational> },
}

impl Solution {
    pub fn solution(&self) -> Option<&[Rational]> {
        match self {
            Solution::Solved(v) => Some(v),
            Solution::Inconsistent { .. } => None,
        }
    }
}

pub fn solve(m: &RationalMatrix, target: &[Rational]) -> Result<Solution> {
    if target.len() != m.rows {
        return Err(Error::Shape(format!(
            "target of length {} for {} rows",
            target.len(),
            m.rows
        )));
    }
    let mut aug = RationalMatrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = target[i].clone();
    }
    let red = rref(&aug);
    if red.pivots.last() == Some(&m.cols) {
        let left = kernel(&m.transpose());
        let certificate = left
            .basis_vectors
            .into_iter()
            .find(|y| dot(y, target) != Rational::zero())
            .expect("an inconsistent system has a separating left null vector");
        return Ok(Solution::Inconsistent { certificate });
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (i, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix[(i, m.cols)].clone();
    }
    Ok(Solution::Solved(x))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Rank of the span of a set of vectors of equal length.
pub fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(vectors.to_vec())
        .map(|m| m.rank())
        .unwrap_or(0)
}

/// An element `a + εb` of the dual numbers `ℚ[ε]/(ε²)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualScalar {
    pub a: Rational,
    pub b: Rational,
}

impl DualScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn real(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    pub fn epsilon() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }
}

impl Zero for DualScalar {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for DualScalar {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Add for DualScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DualScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for DualScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Self::new(self.a * rhs.a, b)
    }
}

impl<'a> Mul<&'a DualScalar> for &'a DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: &DualScalar) -> DualScalar {
        DualScalar::new(&self.a * &rhs.a, &self.a * &rhs.b + &self.b * &rhs.a)
    }
}

/// Square matrix over the dual numbers, used to evaluate relations at `ρ + εΦ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMatrix {
    n: usize,
    data: Vec<DualScalar>,
}

impl DualMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![DualScalar::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = DualScalar::one();
        }
        Self { n, data }
    }

    pub fn from_parts(value: &RationalMatrix, eps: &RationalMatrix) -> Result<Self> {
        if !value.is_square() || value.rows() != eps.rows() || value.cols() != eps.cols() {
            return Err(Error::Shape("dual matrix parts must be equal square shapes".into()));
        }
        let data = value
            .entries()
            .iter()
            .zip(eps.entries())
            .map(|(a, b)| DualScalar::new(a.clone(), b.clone()))
            .collect();
        Ok(Self { n: value.rows(), data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dual matrix size mismatch");
        let n = self.n;
        let mut data = vec![DualScalar::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * &rhs.data[k * n + j];
                    let slot = &mut data[i * n + j];
                    *slot = std::mem::replace(slot, DualScalar::zero()) + prod;
                }
            }
        }
        Self { n, data }
    }

    pub fn add_scaled(&mut self, rhs: &Self, c: &Rational) {
        for (s, r) in self.data.iter_mut().zip(&rhs.data) {
            s.a += &r.a * c;
            s.b += &r.b * c;
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![DualScalar::zero(); n * n],
        }
    }

    pub fn value_part(&self) -> RationalMatrix {
        RationalMatrix::from_vec(self.n, self.n, self.data.iter().map(|d| d.a.clone()).collect())
            .expect("square")
    }

    pub fn epsilon_part(&self) -> RationalMatrix {
        RationalMatrix::from_vec(self.n, self.n, self.data.iter().map(|d| d.b.clone()).collect())
            .expect("square")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
        let data = (0..rows * cols).map(|_| int(rng.gen_range(-9..=9))).collect();
        RationalMatrix::from_vec(rows, cols, data).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = RationalMatrix::identity(3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let z = RationalMatrix::zeros(2, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);

        let m = RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        let r = rref(&m);
        assert_eq!(r.matrix, RationalMatrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_with_fractions() {
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3), int(1)],
            vec![int(2), rat(-5, 7), int(0)],
        ])
        .unwrap();
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        // rows of the rref span the same space: m = L * rref for some L
        for i in 0..2 {
            let v: Vec<Rational> = m.row(i).to_vec();
            let stacked = RationalMatrix::from_rows(vec![
                r.matrix.row(0).to_vec(),
                r.matrix.row(1).to_vec(),
                v,
            ])
            .unwrap();
            assert_eq!(stacked.rank(), 2);
        }
        assert_eq!(r.matrix[(0, 0)], int(1));
        assert_eq!(r.matrix[(1, 0)], int(0));
        assert_eq!(r.matrix[(0, 1)], int(0));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&RationalMatrix::zeros(3, 3)).dimension, 3);
        assert_eq!(kernel(&RationalMatrix::identity(4)).dimension, 0);
        let k = kernel(&RationalMatrix::from_ints(&[&[1, 1]]));
        assert_eq!(k.dimension, 1);
        assert_eq!(k.basis_vectors, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn solve_examples() {
        let t = vec![int(3), rat(1, 2)];
        assert_eq!(
            solve(&RationalMatrix::identity(2), &t).unwrap(),
            Solution::Solved(t.clone())
        );
        assert_eq!(
            solve(&RationalMatrix::from_ints(&[&[1, 1]]), &[int(2)]).unwrap(),
            Solution::Solved(vec![int(2), int(0)])
        );
        match solve(&RationalMatrix::from_ints(&[&[0, 0]]), &[int(1)]).unwrap() {
            Solution::Inconsistent { certificate } => assert_eq!(certificate, vec![int(1)]),
            other => panic!("expected inconsistency, got {other:?}"),
        }
        assert!(solve(&RationalMatrix::identity(2), &[int(1)]).is_err());
    }

    #[test]
    fn inconsistency_certificate_separates() {
        let m = RationalMatrix::from_ints(&[&[1, 2], &[2, 4], &[0, 1]]);
        let target = vec![int(1), int(3), int(0)];
        let Solution::Inconsistent { certificate } = solve(&m, &target).unwrap() else {
            panic!("system is inconsistent");
        };
        let yt = m.transpose().mul_vec(&certificate).unwrap();
        assert!(yt.iter().all(Zero::is_zero));
        assert!(!dot(&certificate, &target).is_zero());
    }

    #[test]
    fn rank_of_transpose_and_rank_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let mut m = random_matrix(&mut rng, rows, cols);
            if rng.gen_bool(0.5) && rows > 1 {
                // force a dependency
                for j in 0..cols {
                    let v = &m[(0, j)] * int(2) - &m[(1 % rows, j)];
                    m[(rows - 1, j)] = v;
                }
            }
            let rank = m.rank();
            assert_eq!(rank, m.transpose().rank());
            let k = kernel(&m);
            assert_eq!(rank + k.dimension, cols);
            for v in &k.basis_vectors {
                assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
            assert_eq!(span_rank(&k.basis_vectors), k.dimension);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut found = 0;
        while found < 20 {
            let m = random_matrix(&mut rng, 3, 3);
            if let Some(inv) = m.inverse() {
                assert_eq!(m.try_mul(&inv).unwrap(), RationalMatrix::identity(3));
                found += 1;
            } else {
                assert!(m.rank() < 3);
            }
        }
        assert!(RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn dual_arithmetic() {
        let eps = DualScalar::epsilon();
        assert!((eps.clone() * eps).is_zero());
        let x = DualScalar::new(int(3), int(5));
        let y = DualScalar::new(rat(1, 2), int(-2));
        let p = x.clone() * y.clone();
        assert_eq!(p.a, rat(3, 2));
        assert_eq!(p.b, int(3) * int(-2) + int(5) * rat(1, 2));
        assert_eq!((x.clone() + y.clone()).a, int(3) + rat(1, 2));
        assert_eq!((x - y).b, int(7));
    }

    #[test]
    fn dual_matrix_value_part_matches_plain_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let (a, b, c, d) = (
                random_matrix(&mut rng, 3, 3),
                random_matrix(&mut rng, 3, 3),
                random_matrix(&mut rng, 3, 3),
                random_matrix(&mut rng, 3, 3),
            );
            let x = DualMatrix::from_parts(&a, &b).unwrap();
            let y = DualMatrix::from_parts(&c, &d).unwrap();
            let p = x.mul(&y);
            assert_eq!(p.value_part(), a.try_mul(&c).unwrap());
            let eps = a.try_mul(&d).unwrap().try_add(&b.try_mul(&c).unwrap()).unwrap();
            assert_eq!(p.epsilon_part(), eps);
        }
    }
}
