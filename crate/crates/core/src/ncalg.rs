//! Free associative algebra over the rationals: words, polynomials, finite
//! presentations and Fox derivatives.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix};

/// A monomial of the free algebra as a sequence of generator indices; the
/// empty word is the unit.
///
/// Ordered graded-lexicographically: shorter words first, then
/// lexicographically by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn letter(index: usize) -> Self {
        Self(vec![index])
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The word `x_l · self`.
    pub fn prepend(&self, l: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(l);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// Renders the word with generator names, collapsing runs into powers.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let name = names.get(l).map_or_else(|| format!("x{l}"), Clone::clone);
            if j - i == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in noncommuting variables, stored canonically (no zero
/// coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Rational>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn generator(index: usize) -> Self {
        Self::monomial(Word::letter(index), Rational::one())
    }

    pub fn monomial(word: Word, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(word, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, word: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in graded-lex order of their words.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().filter_map(Word::max_letter).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Product in the free algebra: bilinear extension of concatenation.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// Noncommutative partial derivative with respect to generator `l`: each
    /// occurrence of `x_l` in a word contributes `prefix ⊗ suffix`.
    pub fn fox_derivative(&self, l: usize, num_generators: usize) -> Result<BimoduleElement> {
        if l >= num_generators {
            return Err(Error::GeneratorIndex {
                index: l,
                count: num_generators,
            });
        }
        let mut out = BimoduleElement::zero();
        for (w, c) in &self.terms {
            let letters = w.letters();
            for (pos, &letter) in letters.iter().enumerate() {
                if letter == l {
                    out.add_term(
                        Word::new(letters[..pos].to_vec()),
                        Word::new(letters[pos + 1..].to_vec()),
                        c.clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Evaluates at a tuple of square matrices.
    pub fn substitute(&self, point: &[RationalMatrix]) -> Result<RationalMatrix> {
        let n = check_square_tuple(point)?;
        let mut cache = WordCache::new(point);
        let mut out = RationalMatrix::zeros(n, n);
        for (w, c) in &self.terms {
            let value = cache.get(w)?;
            out = out.try_add(&value.scale(c))?;
        }
        Ok(out)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ordered: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a.letters().cmp(b.letters())));
        let mut out = String::new();
        for (k, (w, c)) in ordered.into_iter().enumerate() {
            let negative = *c < Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&w.display_with(names));
            } else {
                out.push_str(&format!("{magnitude}*{}", w.display_with(names)));
            }
        }
        out
    }
}

fn check_square_tuple(point: &[RationalMatrix]) -> Result<usize> {
    let n = point.first().map_or(0, RationalMatrix::rows);
    if point.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::Shape("point matrices must all be n×n".into()));
    }
    Ok(n)
}

/// Ordered product of the letter images; the empty word maps to the identity.
pub fn substitute_words(w: &Word, point: &[RationalMatrix]) -> Result<RationalMatrix> {
    let n = check_square_tuple(point)?;
    let mut acc = RationalMatrix::identity(n);
    for &l in w.letters() {
        let x = point.get(l).ok_or(Error::GeneratorIndex {
            index: l,
            count: point.len(),
        })?;
        acc = acc.try_mul(x)?;
    }
    Ok(acc)
}

/// Memoizes word images at a fixed point.
pub struct WordCache<'a> {
    point: &'a [RationalMatrix],
    cache: BTreeMap<Word, RationalMatrix>,
}

impl<'a> WordCache<'a> {
    pub fn new(point: &'a [RationalMatrix]) -> Self {
        Self {
            point,
            cache: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, w: &Word) -> Result<RationalMatrix> {
        if let Some(v) = self.cache.get(w) {
            return Ok(v.clone());
        }
        let value = match w.letters().split_last() {
            None => substitute_words(w, self.point)?,
            Some((&last, init)) => {
                let head = self.get(&Word::new(init.to_vec()))?;
                let x = self.point.get(last).ok_or(Error::GeneratorIndex {
                    index: last,
                    count: self.point.len(),
                })?;
                head.try_mul(x)?
            }
        };
        self.cache.insert(w.clone(), value.clone());
        Ok(value)
    }
}

/// Element of `F ⊗ F^op`: a finite sum of `c · (left ⊗ right)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BimoduleElement {
    terms: BTreeMap<(Word, Word), Rational>,
}

impl BimoduleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let v = self.terms.remove(&key).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Word, Rational)>) -> Self {
        let mut out = Self::zero();
        for (l, r, c) in terms {
            out.add_term(l, r, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, r, c) in other.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Multiplies `g` into the right (suffix) slot.
    pub fn right_multiply(&self, g: &NcPolynomial) -> Self {
        let mut out = Self::zero();
        for (l, r, c) in self.terms() {
            for (w, d) in g.terms() {
                out.add_term(l.clone(), r.concat(w), c * d);
            }
        }
        out
    }

    /// Multiplies `f` into the left (prefix) slot.
    pub fn left_multiply(&self, f: &NcPolynomial) -> Self {
        let mut out = Self::zero();
        for (w, d) in f.terms() {
            for (l, r, c) in self.terms() {
                out.add_term(w.concat(l), r.clone(), c * d);
            }
        }
        out
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms
            .keys()
            .flat_map(|(l, r)| [l.max_letter(), r.max_letter()])
            .flatten()
            .max()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (l, r, c)) in self.terms().enumerate() {
            let negative = *c < Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format!(
                "{magnitude} ({} | {})",
                word_as_product(l, names),
                word_as_product(r, names)
            ));
        }
        out
    }
}

/// `*`-joined letters with `1` for the empty word (no power shorthand).
fn word_as_product(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.letters()
        .iter()
        .map(|&l| names.get(l).map_or_else(|| format!("x{l}"), Clone::clone))
        .collect::<Vec<_>>()
        .join("*")
}

/// A finitely presented algebra `k⟨x_1..x_m⟩ / (relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relations: Vec<NcPolynomial>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relations: Vec<NcPolynomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &generator_names {
            if name.is_empty() {
                return Err(Error::Presentation("empty generator name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::Presentation(format!("duplicate generator '{name}'")));
            }
        }
        let m = generator_names.len();
        for (i, r) in relations.iter().enumerate() {
            if let Some(l) = r.max_letter().filter(|&l| l >= m) {
                return Err(Error::Presentation(format!(
                    "relation {i} uses generator index {l} but only {m} generators exist"
                )));
            }
        }
        Ok(Self {
            generator_names,
            relations,
        })
    }

    /// The free algebra on the given generators.
    pub fn free<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(names.into_iter().map(Into::into).collect(), Vec::new())
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn num_relations(&self) -> usize {
        self.relations.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|g| g == name)
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(NcPolynomial::degree).max().unwrap_or(0)
    }

    pub fn with_relations(&self, extra: impl IntoIterator<Item = NcPolynomial>) -> Result<Self> {
        let mut relations = self.relations.clone();
        relations.extend(extra);
        Self::new(self.generator_names.clone(), relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use proptest::prelude::*;

    fn x() -> NcPolynomial {
        NcPolynomial::generator(0)
    }
    fn y() -> NcPolynomial {
        NcPolynomial::generator(1)
    }
    fn w(letters: &[usize]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn graded_lex_order() {
        let mut words = vec![w(&[1, 0]), w(&[]), w(&[1]), w(&[0, 1]), w(&[0]), w(&[0, 0, 0])];
        words.sort();
        assert_eq!(
            words,
            vec![w(&[]), w(&[0]), w(&[1]), w(&[0, 1]), w(&[1, 0]), w(&[0, 0, 0])]
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(x().multiply(&y()), NcPolynomial::monomial(w(&[0, 1]), int(1)));
        let f = x().add(&y().scale(&int(3)));
        assert_eq!(NcPolynomial::one().multiply(&f), f);
        let lhs = x().add(&y()).multiply(&x().sub(&y()));
        let expected = NcPolynomial::from_terms([
            (w(&[0, 0]), int(1)),
            (w(&[0, 1]), int(-1)),
            (w(&[1, 0]), int(1)),
            (w(&[1, 1]), int(-1)),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn cancellation_is_canonical() {
        let p = x().sub(&x());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn fox_examples() {
        let comm = x().multiply(&y()).sub(&y().multiply(&x()));
        let d = comm.fox_derivative(0, 2).unwrap();
        let expected = BimoduleElement::from_terms([
            (w(&[]), w(&[1]), int(1)),
            (w(&[1]), w(&[]), int(-1)),
        ]);
        assert_eq!(d, expected);

        let sq = x().pow(2);
        let expected = BimoduleElement::from_terms([
            (w(&[]), w(&[0]), int(1)),
            (w(&[0]), w(&[]), int(1)),
        ]);
        assert_eq!(sq.fox_derivative(0, 1).unwrap(), expected);

        assert!(y().pow(3).fox_derivative(0, 2).unwrap().is_zero());
        assert!(matches!(
            x().fox_derivative(2, 2),
            Err(Error::GeneratorIndex { index: 2, count: 2 })
        ));
    }

    #[test]
    fn substitute_examples() {
        let xm = RationalMatrix::from_ints(&[&[0, 1], &[0, 0]]);
        let ym = RationalMatrix::from_ints(&[&[1, 0], &[0, 0]]);
        let pt = vec![xm.clone(), ym.clone()];
        assert_eq!(substitute_words(&Word::unit(), &pt).unwrap(), RationalMatrix::identity(2));
        assert_eq!(substitute_words(&w(&[0, 1]), &pt).unwrap(), xm.try_mul(&ym).unwrap());
        // oracle: XY = [[0,0],[0,0]] already, so XYX = 0
        assert!(substitute_words(&w(&[0, 1, 0]), &pt).unwrap().is_zero());
        let bad = vec![xm, RationalMatrix::identity(3)];
        assert!(substitute_words(&w(&[0]), &bad).is_err());
    }

    #[test]
    fn presentation_validation() {
        assert!(Presentation::free(["x", "x"]).is_err());
        assert!(Presentation::free([""]).is_err());
        assert!(Presentation::new(vec!["x".into()], vec![y()]).is_err());
        let p = Presentation::new(vec!["x".into(), "y".into()], vec![x().multiply(&y())]).unwrap();
        assert_eq!(p.num_relations(), 1);
        assert_eq!(p.generator_index("y"), Some(1));
    }

    #[test]
    fn display_forms() {
        let names = vec!["x".to_string(), "y".to_string()];
        let comm = x().multiply(&y()).sub(&y().multiply(&x())).sub(&NcPolynomial::one());
        assert_eq!(comm.display_with(&names), "x*y - y*x - 1");
        let p = NcPolynomial::monomial(w(&[0, 0, 1]), crate::exactla::rat(-2, 3));
        assert_eq!(p.display_with(&names), "-2/3*x^2*y");
        assert_eq!(NcPolynomial::zero().display_with(&names), "0");
    }

    fn arb_poly() -> impl Strategy<Value = NcPolynomial> {
        prop::collection::vec(
            (prop::collection::vec(0usize..2, 0..=4), -3i64..=3),
            0..5,
        )
        .prop_map(|terms| {
            NcPolynomial::from_terms(terms.into_iter().map(|(l, c)| (Word::new(l), int(c))))
        })
    }

    fn arb_matrix() -> impl Strategy<Value = RationalMatrix> {
        prop::collection::vec(-3i64..=3, 4).prop_map(|v| {
            RationalMatrix::from_vec(2, 2, v.into_iter().map(int).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn fox_product_rule(f in arb_poly(), g in arb_poly(), l in 0usize..2) {
            let lhs = f.multiply(&g).fox_derivative(l, 2).unwrap();
            let rhs = f.fox_derivative(l, 2).unwrap().right_multiply(&g)
                .add(&g.fox_derivative(l, 2).unwrap().left_multiply(&f));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_is_multiplicative(
            f in arb_poly(), g in arb_poly(), a in arb_matrix(), b in arb_matrix()
        ) {
            let pt = vec![a, b];
            let lhs = f.multiply(&g).substitute(&pt).unwrap();
            let rhs = f.substitute(&pt).unwrap().try_mul(&g.substitute(&pt).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonicalization_idempotent(f in arb_poly()) {
            let again = NcPolynomial::from_terms(f.terms().map(|(w, c)| (w.clone(), c.clone())));
            prop_assert!(f.terms().all(|(_, c)| !c.is_zero()));
            prop_assert_eq!(again, f);
        }
    }
}
