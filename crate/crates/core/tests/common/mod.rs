#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use repscheme_core::cohomology::ResolutionStep;
use repscheme_core::exactla::{Rational, RationalMatrix};
use repscheme_core::format::{parse_algebra, parse_point, parse_resolution};
use repscheme_core::ncalg::Presentation;
use repscheme_core::repscheme::{check_point, GroupElement, RepPoint};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn read(rel: &str) -> String {
    let path = corpus_dir().join(rel);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn algebra(name: &str) -> Presentation {
    parse_algebra(&read(&format!("{name}.alg"))).unwrap()
}

pub fn point(name: &str) -> RepPoint {
    parse_point(&read(&format!("points/{name}.pt"))).unwrap()
}

pub fn resolution(name: &str, p: &Presentation) -> ResolutionStep {
    parse_resolution(&read(&format!("{name}.res")), p).unwrap()
}

/// Every `*.alg` in the corpus, sorted by name.
pub fn corpus_algebras() -> Vec<(String, Presentation)> {
    let mut names: Vec<String> = fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| {
            let path = e.unwrap().path();
            (path.extension()? == "alg").then(|| path.file_stem()?.to_str().map(str::to_string))?
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), algebra(&n))).collect()
}

/// Corpus points named `<algebra>_*.pt` that are valid for the algebra.
pub fn valid_points(name: &str, p: &Presentation) -> Vec<(String, RepPoint)> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir().join("points"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|path| {
            path.file_stem()
                .and_then(|s| s.to_str())
                .is_some_and(|s| s.strip_prefix(name).is_some_and(|rest| rest.starts_with('_')))
        })
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|path| {
            let label = path.file_stem().unwrap().to_str().unwrap().to_string();
            (label, parse_point(&fs::read_to_string(&path).unwrap()).unwrap())
        })
        .filter(|(_, pt)| check_point(p, pt).unwrap().is_valid())
        .collect()
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-6..=6);
    let den: i64 = if rng.gen_bool(0.25) { rng.gen_range(1..=3) } else { 1 };
    Rational::new(num.into(), den.into())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let data = (0..n * n).map(|_| small_rational(rng)).collect();
    RationalMatrix::from_vec(n, n, data).unwrap()
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize, m: usize) -> RepPoint {
    RepPoint::new(n, (0..m).map(|_| random_matrix(rng, n)).collect()).unwrap()
}

pub fn random_group_element(rng: &mut ChaCha8Rng, n: usize) -> GroupElement {
    loop {
        if let Ok(g) = GroupElement::new(random_matrix(rng, n)) {
            return g;
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// Plain Gauss-Jordan rank over the rationals; deliberately shares no code
/// with the library's fraction-free elimination.
pub fn oracle_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Rational::one() / rows[rank][c].clone();
        let pivot: Vec<Rational> = rows[rank].iter().map(|v| v * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Naive product, independent of `RationalMatrix::try_mul`.
pub fn oracle_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.rows();
    let mut out = RationalMatrix::zeros(n, b.cols());
    for i in 0..n {
        for j in 0..b.cols() {
            let mut s = Rational::zero();
            for k in 0..a.cols() {
                s += &a[(i, k)] * &b[(k, j)];
            }
            out[(i, j)] = s;
        }
    }
    out
}
