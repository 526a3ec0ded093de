//! Hochschild cochains of a presented algebra with coefficients in
//! `End(k^n)` at a rational point, and what they compute: tangent spaces,
//! `Ext^i(M, M)` for `i ≤ 2`, the smoothness certificate, and deformations.
//!
//! Conventions. The presentation gives the start of a free bimodule
//! resolution `F₁ → F₀ → A^e → A` with `F₀` free on the generators and `F₁`
//! free on the relations; the map `F₁ → F₀` is the Fox Jacobian. Applying
//! `Hom_{A^e}(−, End M)` gives
//!
//! ```text
//! M_n --d0--> M_n^m --d1--> M_n^r --d2--> M_n^{r₂}
//! ```
//!
//! where `d2` exists only when the caller supplies the next resolution step.
//! Cochains are flattened slot by slot, each `n×n` block row-major. With
//! these indices `ker d0` is the commutant (`Ext⁰`) and `ker d1` is the space
//! of derivations, i.e. the tangent space of `Rep_A^n` at the point.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{kernel, solve, DualMatrix, KernelBasis, Rational, RationalMatrix, Solution};
use crate::ncalg::{BimoduleElement, NcPolynomial, Presentation, WordCache};
use crate::repscheme::{require_valid, RepPoint};

/// A map `F₂ → F₁` of free bimodules continuing the presentation
/// resolution: `entries[t][s]` is the component from the `t`-th generator of
/// `F₂` to the `s`-th relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    entries: Vec<Vec<BimoduleElement>>,
}

impl ResolutionStep {
    pub fn new(entries: Vec<Vec<BimoduleElement>>) -> Self {
        Self { entries }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BimoduleElement>] {
        &self.entries
    }

    fn check_shape(&self, presentation: &Presentation) -> Result<()> {
        let r = presentation.num_relations();
        let m = presentation.num_generators();
        for (t, row) in self.entries.iter().enumerate() {
            if row.len() != r {
                return Err(Error::Resolution(format!(
                    "row {t} has {} entries, expected one per relation ({r})",
                    row.len()
                )));
            }
            if let Some(l) = row.iter().filter_map(BimoduleElement::max_letter).max() {
                if l >= m {
                    return Err(Error::Resolution(format!(
                        "row {t} uses generator index {l} but only {m} generators exist"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainData {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    /// `(m·n²) × n²`
    pub d0: RationalMatrix,
    /// `(r·n²) × (m·n²)`
    pub d1: RationalMatrix,
    /// `(r₂·n²) × (r·n²)`
    pub d2: Option<RationalMatrix>,
}

/// Matrix of `Φ ↦ Σ c·ρ(u)·Φ·ρ(v)` on row-major `vec(Φ)`, added into the
/// block at `(row0, col0)` of `target`.
fn add_bimodule_operator(
    target: &mut RationalMatrix,
    row0: usize,
    col0: usize,
    elem: &BimoduleElement,
    cache: &mut WordCache<'_>,
    n: usize,
) -> Result<()> {
    for (u, v, c) in elem.terms() {
        let left = cache.get(u)?;
        let right = cache.get(v)?;
        for i in 0..n {
            for a in 0..n {
                let ua = &left[(i, a)];
                if ua.is_zero() {
                    continue;
                }
                let cu = c * ua;
                for b in 0..n {
                    for j in 0..n {
                        let vb = &right[(b, j)];
                        if !vb.is_zero() {
                            target[(row0 + i * n + j, col0 + a * n + b)] += &cu * vb;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn build_d0(point: &RepPoint) -> RationalMatrix {
    let n = point.n();
    let m = point.num_generators();
    let mut d0 = RationalMatrix::zeros(m * n * n, n * n);
    for (l, x) in point.matrices().iter().enumerate() {
        // (X B − B X)_{ij} = Σ_k X_ik B_kj − B_ik X_kj
        for i in 0..n {
            for j in 0..n {
                let row = l * n * n + i * n + j;
                for k in 0..n {
                    d0[(row, k * n + j)] += &x[(i, k)];
                    d0[(row, i * n + k)] -= &x[(k, j)];
                }
            }
        }
    }
    d0
}

fn build_d1(presentation: &Presentation, point: &RepPoint) -> Result<RationalMatrix> {
    let n = point.n();
    let m = presentation.num_generators();
    let r = presentation.num_relations();
    let mut d1 = RationalMatrix::zeros(r * n * n, m * n * n);
    if m == 0 {
        return Ok(d1);
    }
    let mut cache = WordCache::new(point.matrices());
    for (s, rel) in presentation.relations().iter().enumerate() {
        for l in 0..m {
            let fox = rel.fox_derivative(l, m)?;
            add_bimodule_operator(&mut d1, s * n * n, l * n * n, &fox, &mut cache, n)?;
        }
    }
    Ok(d1)
}

/// Assembles `d0`, `d1` and, given the next resolution step, `d2`.
pub fn build_complex(
    presentation: &Presentation,
    point: &RepPoint,
    res2: Option<&ResolutionStep>,
) -> Result<CochainData> {
    require_valid(presentation, point)?;
    let n = point.n();
    let m = presentation.num_generators();
    let r = presentation.num_relations();
    let d0 = build_d0(point);
    let d1 = build_d1(presentation, point)?;
    let d2 = match res2 {
        None => None,
        Some(step) => {
            step.check_shape(presentation)?;
            let mut d2 = RationalMatrix::zeros(step.rows() * n * n, r * n * n);
            let mut cache = WordCache::new(point.matrices());
            for (t, row) in step.entries.iter().enumerate() {
                for (s, elem) in row.iter().enumerate() {
                    if m == 0 && !elem.is_zero() {
                        return Err(Error::Resolution("entries need generators".into()));
                    }
                    add_bimodule_operator(&mut d2, t * n * n, s * n * n, elem, &mut cache, n)?;
                }
            }
            let composite = d2.try_mul(&d1)?;
            if let Some((row, col, v)) = composite.first_nonzero() {
                return Err(Error::Resolution(format!(
                    "d2·d1 ≠ 0 at this point: entry ({row},{col}) = {v}"
                )));
            }
            Some(d2)
        }
    };
    Ok(CochainData { n, m, r, d0, d1, d2 })
}

/// Basis of the derivations `ker d1`, i.e. of `T_ρ Rep_A^n`.
pub fn tangent_space(presentation: &Presentation, point: &RepPoint) -> Result<KernelBasis> {
    let data = build_complex(presentation, point, None)?;
    Ok(kernel(&data.d1))
}

/// What is known about `Ext²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ext2Evidence {
    /// Computed from a supplied resolution step.
    Exact(usize),
    /// `dim coker d1`; depends on the presentation (redundant relations inflate it).
    UpperBound(usize),
}

impl Ext2Evidence {
    pub fn value(&self) -> usize {
        match *self {
            Ext2Evidence::Exact(v) | Ext2Evidence::UpperBound(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Ext2Evidence::Exact(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtReport {
    pub ext0: usize,
    pub ext1: usize,
    pub ext2: Ext2Evidence,
    pub tangent_dim: usize,
    /// Dimension of the inner derivations, `n² − ext0`.
    pub inner_dim: usize,
}

impl CochainData {
    pub fn ext_report(&self) -> ExtReport {
        let n2 = self.n * self.n;
        let rank_d0 = self.d0.rank();
        let rank_d1 = self.d1.rank();
        let ext0 = n2 - rank_d0;
        let ker_d1 = self.m * n2 - rank_d1;
        let ext1 = ker_d1 - rank_d0;
        let ext2 = match &self.d2 {
            Some(d2) => Ext2Evidence::Exact(self.r * n2 - d2.rank() - rank_d1),
            None => Ext2Evidence::UpperBound(self.r * n2 - rank_d1),
        };
        ExtReport {
            ext0,
            ext1,
            ext2,
            tangent_dim: ker_d1,
            inner_dim: rank_d0,
        }
    }

    /// `dim ker d0`, `dim ker d1`.
    pub fn kernel_dims(&self) -> (usize, usize) {
        let n2 = self.n * self.n;
        (n2 - self.d0.rank(), self.m * n2 - self.d1.rank())
    }
}

pub fn ext_dimensions(
    presentation: &Presentation,
    point: &RepPoint,
    res2: Option<&ResolutionStep>,
) -> Result<ExtReport> {
    Ok(build_complex(presentation, point, res2)?.ext_report())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoCertificateReason {
    CoherenceNotAsserted,
    Ext2PossiblyNonzero { bound: usize },
    Ext2Nonzero { value: usize },
}

impl std::fmt::Display for NoCertificateReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::CoherenceNotAsserted => write!(f, "coherence-not-asserted"),
            Self::Ext2PossiblyNonzero { bound } => write!(f, "ext2-possibly-nonzero(bound={bound})"),
            Self::Ext2Nonzero { value } => write!(f, "ext2-nonzero(value={value})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothVerdict {
    CertifiedSmooth,
    NoCertificate(NoCertificateReason),
}

/// Certifies smoothness of `Rep_A^n` at the point when the algebra is
/// asserted coherent and `Ext²(M, M)` is shown to vanish (exactly, or via a
/// zero upper bound).
pub fn smooth_certificate(
    presentation: &Presentation,
    point: &RepPoint,
    assume_coherent: bool,
    res2: Option<&ResolutionStep>,
) -> Result<SmoothVerdict> {
    let report = ext_dimensions(presentation, point, res2)?;
    if !assume_coherent {
        return Ok(SmoothVerdict::NoCertificate(NoCertificateReason::CoherenceNotAsserted));
    }
    Ok(match report.ext2 {
        Ext2Evidence::Exact(0) | Ext2Evidence::UpperBound(0) => SmoothVerdict::CertifiedSmooth,
        Ext2Evidence::Exact(value) => {
            SmoothVerdict::NoCertificate(NoCertificateReason::Ext2Nonzero { value })
        }
        Ext2Evidence::UpperBound(bound) => {
            SmoothVerdict::NoCertificate(NoCertificateReason::Ext2PossiblyNonzero { bound })
        }
    })
}

fn check_direction(point: &RepPoint, direction: &[RationalMatrix]) -> Result<()> {
    let n = point.n();
    if direction.len() != point.num_generators()
        || direction.iter().any(|d| d.rows() != n || d.cols() != n)
    {
        return Err(Error::Shape(format!(
            "direction must be {} matrices of size {n}x{n}",
            point.num_generators()
        )));
    }
    Ok(())
}

/// ε-part of `f(ρ + εΦ)` computed entirely in dual-number arithmetic.
pub fn dual_linearization(
    relation: &NcPolynomial,
    point: &RepPoint,
    direction: &[RationalMatrix],
) -> Result<RationalMatrix> {
    check_direction(point, direction)?;
    let n = point.n();
    let duals = point
        .matrices()
        .iter()
        .zip(direction)
        .map(|(x, d)| DualMatrix::from_parts(x, d))
        .collect::<Result<Vec<_>>>()?;
    let mut total = DualMatrix::zeros(n);
    for (w, c) in relation.terms() {
        let mut acc = DualMatrix::identity(n);
        for &l in w.letters() {
            acc = acc.mul(&duals[l]);
        }
        total.add_scaled(&acc, c);
    }
    Ok(total.epsilon_part())
}

/// Whether `ρ + εΦ` is a representation over the dual numbers.
pub fn deformation_check(
    presentation: &Presentation,
    point: &RepPoint,
    direction: &[RationalMatrix],
) -> Result<bool> {
    require_valid(presentation, point)?;
    check_direction(point, direction)?;
    for rel in presentation.relations() {
        if !dual_linearization(rel, point, direction)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flattens an `m`-tuple of `n×n` matrices into a cochain vector.
pub fn flatten(matrices: &[RationalMatrix]) -> Vec<Rational> {
    matrices.iter().flat_map(|x| x.entries().iter().cloned()).collect()
}

/// Splits a cochain vector into `n×n` blocks.
pub fn unflatten(v: &[Rational], n: usize) -> Vec<RationalMatrix> {
    if n == 0 {
        return Vec::new();
    }
    v.chunks(n * n)
        .map(|c| RationalMatrix::from_vec(n, n, c.to_vec()).expect("n² entries"))
        .collect()
}

/// Series `Σ_k t^k C_k` of square matrices truncated below `t^len`.
type Series = Vec<RationalMatrix>;

fn series_mul(a: &Series, b: &Series, len: usize, n: usize) -> Result<Series> {
    let mut out = vec![RationalMatrix::zeros(n, n); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].try_add(&x.try_mul(y)?)?;
            }
        }
    }
    Ok(out)
}

/// Coefficients of `f(X(t))` below `t^len`.
pub fn evaluate_series(
    relation: &NcPolynomial,
    series: &[Series],
    n: usize,
    len: usize,
) -> Result<Series> {
    let mut unit = vec![RationalMatrix::zeros(n, n); len];
    if len > 0 {
        unit[0] = RationalMatrix::identity(n);
    }
    let mut total = vec![RationalMatrix::zeros(n, n); len];
    for (w, c) in relation.terms() {
        let mut acc = unit.clone();
        for &l in w.letters() {
            acc = series_mul(&acc, &series[l], len, n)?;
        }
        for (t, a) in total.iter_mut().zip(&acc) {
            *t = t.try_add(&a.scale(c))?;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftOutcome {
    /// `series[l][k]` is the coefficient of `t^k` in `X_l(t)`, `k < order`.
    Lifted { series: Vec<Vec<RationalMatrix>> },
    Obstructed {
        /// The power of `t` at which no correction exists.
        order: usize,
        /// The order-`order` error of the relations, flattened like `d1`'s rows.
        obstruction: Vec<Rational>,
        /// `y` with `yᵀ d1 = 0` and `yᵀ·obstruction ≠ 0`.
        certificate: Vec<Rational>,
    },
}

/// Extends `ρ + tΦ` to a representation over `k[t]/(t^order)`, choosing the
/// echelon solution of `d1(Φ⁽ʲ⁾) = −E_j` at each order `j`.
pub fn lift_deformation(
    presentation: &Presentation,
    point: &RepPoint,
    direction: &[RationalMatrix],
    order: usize,
) -> Result<LiftOutcome> {
    if order < 2 {
        return Err(Error::Argument("lift order must be at least 2".into()));
    }
    let data = build_complex(presentation, point, None)?;
    check_direction(point, direction)?;
    let n = point.n();
    let image = data.d1.mul_vec(&flatten(direction))?;
    if let Some(k) = image.iter().position(|v| !v.is_zero()) {
        return Err(Error::NotTangent {
            relation: k / (n * n).max(1),
        });
    }
    let mut series: Vec<Series> = point
        .matrices()
        .iter()
        .zip(direction)
        .map(|(x, d)| vec![x.clone(), d.clone()])
        .collect();
    for j in 2..order {
        for s in series.iter_mut() {
            s.push(RationalMatrix::zeros(n, n));
        }
        let mut error = Vec::with_capacity(data.r * n * n);
        for rel in presentation.relations() {
            let values = evaluate_series(rel, &series, n, j + 1)?;
            error.extend(values[j].entries().iter().cloned());
        }
        let target: Vec<Rational> = error.iter().map(|v| -v.clone()).collect();
        match solve(&data.d1, &target)? {
            Solution::Solved(correction) => {
                for (s, c) in series.iter_mut().zip(unflatten(&correction, n)) {
                    s[j] = c;
                }
            }
            Solution::Inconsistent { certificate } => {
                return Ok(LiftOutcome::Obstructed {
                    order: j,
                    obstruction: error,
                    certificate,
                });
            }
        }
    }
    Ok(LiftOutcome::Lifted { series })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub label: String,
    pub z0: usize,
    pub z1: usize,
    pub ext2: Ext2Evidence,
    pub tangent_dim: usize,
}

/// Kernel dimensions of the cochain differentials along a user-supplied
/// family of points, in input order.
pub fn semicontinuity_scan(
    presentation: &Presentation,
    family: &[(String, RepPoint)],
    res2: Option<&ResolutionStep>,
) -> Result<Vec<ScanRow>> {
    family
        .iter()
        .map(|(label, point)| {
            let data = build_complex(presentation, point, res2).map_err(|e| Error::FamilyMember {
                label: label.clone(),
                source: Box::new(e),
            })?;
            let (z0, z1) = data.kernel_dims();
            let report = data.ext_report();
            Ok(ScanRow {
                label: label.clone(),
                z0,
                z1,
                ext2: report.ext2,
                tangent_dim: report.tangent_dim,
            })
        })
        .collect()
}
