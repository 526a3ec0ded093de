use std::fs;
use std::path::{Path, PathBuf};

use clap::Subcommand;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use repscheme_core::cohomology::{
    ext_dimensions, lift_deformation, semicontinuity_scan, smooth_certificate, tangent_space, Ext2Evidence,
    LiftOutcome, ResolutionStep, SmoothVerdict,
};
use repscheme_core::exactla::{Rational, RationalMatrix};
use repscheme_core::format::{
    format_ideal, parse_algebra_file, parse_family, parse_matrix_tuple, parse_point, parse_resolution,
    parse_vector, print_algebra,
};
use repscheme_core::hilbert::{abelianization, hilb_canonical_form, hilb_dimension_at, krylov_span, PointedRep};
use repscheme_core::ncalg::{Presentation, Word};
use repscheme_core::repscheme::{
    check_point, emit_ideal_generators, module_isomorphic, IsoVerdict, PointVerdict, RepPoint, DEFAULT_ISO_TRIES,
};
use repscheme_core::Error;

/// Relation degree above which a cost warning is printed.
const DEGREE_WARNING: usize = 8;

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a point satisfies every relation.
    Check { algebra: PathBuf, point: PathBuf },
    /// Emit the polynomial equations of Rep^n.
    Ideal {
        algebra: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        /// Write the equations to a file instead of the report.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Zariski tangent space at a point.
    Tangent { algebra: PathBuf, point: PathBuf },
    /// Ext dimensions of the module at a point.
    Ext {
        algebra: PathBuf,
        point: PathBuf,
        #[arg(long)]
        resolution: Option<PathBuf>,
    },
    /// Smoothness certificate for coherent algebras.
    SmoothCert {
        algebra: PathBuf,
        point: PathBuf,
        #[arg(long)]
        assume_coherent: bool,
        #[arg(long)]
        resolution: Option<PathBuf>,
    },
    /// Lift a tangent direction to a truncated power series.
    Deform {
        algebra: PathBuf,
        point: PathBuf,
        direction: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Ext and tangent dimensions along a family of points.
    Scan { algebra: PathBuf, family: PathBuf },
    /// Whether the vector generates the module.
    Cyclic { algebra: PathBuf, point: PathBuf, vector: PathBuf },
    /// Canonical form of a cyclic pointed representation.
    HilbCanon { algebra: PathBuf, point: PathBuf, vector: PathBuf },
    /// Local dimension count of the Hilbert scheme.
    HilbDim { algebra: PathBuf, point: PathBuf, vector: PathBuf },
    /// Add all commutators of generators.
    Abelianize { algebra: PathBuf },
    /// Decide whether two points give isomorphic modules.
    Iso {
        algebra: PathBuf,
        point_a: PathBuf,
        point_b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ISO_TRIES)]
        tries: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Ideal { .. } => "ideal",
            Command::Tangent { .. } => "tangent",
            Command::Ext { .. } => "ext",
            Command::SmoothCert { .. } => "smooth-cert",
            Command::Deform { .. } => "deform",
            Command::Scan { .. } => "scan",
            Command::Cyclic { .. } => "cyclic",
            Command::HilbCanon { .. } => "hilb-canon",
            Command::HilbDim { .. } => "hilb-dim",
            Command::Abelianize { .. } => "abelianize",
            Command::Iso { .. } => "iso",
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input files or arguments.
    Usage(String),
    /// The mathematical question has a negative answer that blocks the command.
    Domain(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

fn is_domain(e: &Error) -> bool {
    match e {
        Error::InvalidPoint { .. }
        | Error::NotTangent { .. }
        | Error::NotCyclic { .. }
        | Error::Singular => true,
        Error::FamilyMember { source, .. } => is_domain(source),
        _ => false,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if is_domain(&e) {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// The result payload, plus whether it records a domain failure.
pub struct Outcome {
    pub result: Value,
    pub failed: bool,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome { result, failed: false }
    }
}

/// Reads input files and hashes their contents in order.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update((text.len() as u64).to_be_bytes());
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    pub fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }

    fn parsed<T>(&mut self, path: &Path, parse: impl FnOnce(&str) -> Result<T, Error>) -> Result<T, Failure> {
        let text = self.read(path)?;
        parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }

    fn algebra(&mut self, path: &Path) -> Result<(Presentation, Option<String>), Failure> {
        let file = self.parsed(path, parse_algebra_file)?;
        let degree = file.presentation.max_relation_degree();
        if degree > DEGREE_WARNING {
            eprintln!(
                "warning: {} has a relation of degree {degree}; ideal and complex sizes grow like n^(2*degree)",
                path.display()
            );
        }
        Ok((file.presentation, file.name))
    }

    fn point(&mut self, path: &Path, p: &Presentation) -> Result<RepPoint, Failure> {
        let point = self.parsed(path, parse_point)?;
        if point.num_generators() != p.num_generators() {
            return Err(Failure::Usage(format!(
                "{}: {} matrices for {} generators",
                path.display(),
                point.num_generators(),
                p.num_generators()
            )));
        }
        Ok(point)
    }

    fn pointed(&mut self, algebra: &Path, point: &Path, vector: &Path) -> Result<(Presentation, PointedRep), Failure> {
        let (p, _) = self.algebra(algebra)?;
        let pt = self.point(point, &p)?;
        let v = self.parsed(vector, parse_vector)?;
        let pr = PointedRep::new(pt, v).map_err(|e| Failure::Usage(format!("{}: {e}", vector.display())))?;
        Ok((p, pr))
    }

    fn resolution(&mut self, path: Option<&Path>, p: &Presentation) -> Result<Option<ResolutionStep>, Failure> {
        path.map(|path| self.parsed(path, |t| parse_resolution(t, p))).transpose()
    }
}

fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

fn matrix(m: &RationalMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

fn named_matrices(names: &[String], mats: &[RationalMatrix]) -> Value {
    names
        .iter()
        .zip(mats)
        .map(|(name, m)| (name.clone(), matrix(m)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn words(ws: &[Word], names: &[String]) -> Value {
    ws.iter().map(|w| Value::String(w.display_with(names))).collect()
}

fn ext2_fields(e: &Ext2Evidence) -> (usize, bool) {
    (e.value(), e.is_exact())
}

pub fn run(command: &Command, seed: u64, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match command {
        Command::Check { algebra, point } => {
            let (p, _) = inputs.algebra(algebra)?;
            let pt = inputs.point(point, &p)?;
            let verdict = check_point(&p, &pt)?;
            let violations: Vec<Value> = match &verdict {
                PointVerdict::Valid => Vec::new(),
                PointVerdict::Violations(vs) => vs
                    .iter()
                    .map(|v| {
                        json!({
                            "relation": v.relation,
                            "entry": [v.row + 1, v.col + 1],
                            "value": v.value.to_string(),
                        })
                    })
                    .collect(),
            };
            Ok(Outcome {
                failed: !verdict.is_valid(),
                result: json!({ "valid": verdict.is_valid(), "violations": violations }),
            })
        }
        Command::Ideal { algebra, n, output } => {
            let (p, _) = inputs.algebra(algebra)?;
            let gens = emit_ideal_generators(&p, *n)?;
            let names = p.generator_names();
            let mut result = json!({ "n": n, "count": gens.len() });
            if let Some(path) = output {
                fs::write(path, format_ideal(&gens, names))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                result["output"] = Value::String(path.display().to_string());
            } else {
                result["generators"] = gens
                    .iter()
                    .map(|g| {
                        json!({
                            "relation": g.relation,
                            "entry": [g.row + 1, g.col + 1],
                            "polynomial": g.polynomial.display_with(names),
                        })
                    })
                    .collect();
            }
            Ok(Outcome::ok(result))
        }
        Command::Tangent { algebra, point } => {
            let (p, _) = inputs.algebra(algebra)?;
            let pt = inputs.point(point, &p)?;
            let basis = tangent_space(&p, &pt)?;
            Ok(Outcome::ok(json!({
                "n": pt.n(),
                "tangent_dim": basis.dimension,
                "basis": basis.basis_vectors.iter().map(|v| vector(v)).collect::<Vec<_>>(),
            })))
        }
        Command::Ext {
            algebra,
            point,
            resolution,
        } => {
            let (p, _) = inputs.algebra(algebra)?;
            let pt = inputs.point(point, &p)?;
            let res = inputs.resolution(resolution.as_deref(), &p)?;
            let rep = ext_dimensions(&p, &pt, res.as_ref())?;
            let (ext2, exact) = ext2_fields(&rep.ext2);
            Ok(Outcome::ok(json!({
                "ext0": rep.ext0,
                "ext1": rep.ext1,
                "ext2": ext2,
                "ext2_exact": exact,
                "tangent_dim": rep.tangent_dim,
                "inner_dim": rep.inner_dim,
            })))
        }
        Command::SmoothCert {
            algebra,
            point,
            assume_coherent,
            resolution,
        } => {
            let (p, _) = inputs.algebra(algebra)?;
            let pt = inputs.point(point, &p)?;
            let res = inputs.resolution(resolution.as_deref(), &p)?;
            let result = match smooth_certificate(&p, &pt, *assume_coherent, res.as_ref())? {
                SmoothVerdict::CertifiedSmooth => json!({ "verdict": "certified-smooth" }),
                SmoothVerdict::NoCertificate(reason) => {
                    json!({ "verdict": "no-certificate", "reason": reason.to_string() })
                }
            };
            Ok(Outcome::ok(result))
        }
        Command::Deform {
            algebra,
            point,
            direction,
            order,
        } => {
            let (p, _) = inputs.algebra(algebra)?;
            let pt = inputs.point(point, &p)?;
            let (dn, dir) = inputs.parsed(direction, parse_matrix_tuple)?;
            if dn != pt.n() || dir.len() != p.num_generators() {
                return Err(Failure::Usage(format!(
                    "{}: direction shape does not match the point",
                    direction.display()
                )));
            }
            let names = p.generator_names();
            Ok(match lift_deformation(&p, &pt, &dir, *order)? {
                LiftOutcome::Lifted { series } => {
                    let series: serde_json::Map<String, Value> = names
                        .iter()
                        .zip(&series)
                        .map(|(name, coeffs)| (name.clone(), coeffs.iter().map(matrix).collect()))
                        .collect();
                    Outcome::ok(json!({ "order": order, "outcome": "lifted", "series": series }))
                }
                LiftOutcome::Obstructed {
                    order: at,
                    obstruction,
                    certificate,
                } => Outcome {
                    failed: true,
                    result: json!({
                        "order": order,
                        "outcome": "obstructed",
                        "obstruction_order": at,
                        "obstruction": vector(&obstruction),
                        "certificate": vector(&certificate),
                    }),
                },
            })
        }
        Command::Scan { algebra, family } => {
            let (p, _) = inputs.algebra(algebra)?;
            let entries = inputs.parsed(family, parse_family)?;
            let base = family.parent().unwrap_or(Path::new("."));
            let mut members = Vec::with_capacity(entries.len());
            for (label, rel) in entries {
                members.push((label, inputs.point(&base.join(rel), &p)?));
            }
            let rows = semicontinuity_scan(&p, &members, None)?;
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let (ext2, exact) = ext2_fields(&r.ext2);
                    json!({
                        "label": r.label,
                        "z0": r.z0,
                        "z1": r.z1,
                        "ext2": ext2,
                        "ext2_exact": exact,
                        "tangent_dim": r.tangent_dim,
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({ "rows": rows })))
        }
        Command::Cyclic { algebra, point, vector } => {
            let (p, pr) = inputs.pointed(algebra, point, vector)?;
            let span = krylov_span(&p, &pr)?;
            Ok(Outcome::ok(json!({
                "cyclic": span.dimension == pr.point.n(),
                "span_dim": span.dimension,
                "n": pr.point.n(),
                "word_basis": words(&span.word_basis, p.generator_names()),
            })))
        }
        Command::HilbCanon { algebra, point, vector: v } => {
            let (p, pr) = inputs.pointed(algebra, point, v)?;
            let canon = hilb_canonical_form(&p, &pr)?;
            let names = p.generator_names();
            Ok(Outcome::ok(json!({
                "matrices": named_matrices(names, canon.point.matrices()),
                "vector": vector(&canon.vector()),
                "word_basis": words(&canon.word_basis, names),
            })))
        }
        Command::HilbDim { algebra, point, vector } => {
            let (p, pr) = inputs.pointed(algebra, point, vector)?;
            let dim = hilb_dimension_at(&p, &pr)?;
            Ok(Outcome::ok(json!({
                "dimension": dim.dimension,
                "tangent_dim": dim.tangent_dim,
                "caveats": dim.caveats,
            })))
        }
        Command::Abelianize { algebra } => {
            let (p, name) = inputs.algebra(algebra)?;
            let ab = abelianization(&p)?;
            let names = ab.generator_names();
            Ok(Outcome::ok(json!({
                "generators": names,
                "relations": ab.relations().iter().map(|r| r.display_with(names)).collect::<Vec<_>>(),
                "algebra": print_algebra(&ab, name.as_deref()),
            })))
        }
        Command::Iso {
            algebra,
            point_a,
            point_b,
            tries,
        } => {
            let (p, _) = inputs.algebra(algebra)?;
            let a = inputs.point(point_a, &p)?;
            let b = inputs.point(point_b, &p)?;
            let result = match module_isomorphic(&p, &a, &b, seed, *tries)? {
                IsoVerdict::Isomorphic { witness } => json!({ "verdict": "isomorphic", "witness": matrix(&witness) }),
                IsoVerdict::NotIsomorphic => json!({ "verdict": "not-isomorphic" }),
                IsoVerdict::Inconclusive { tries } => json!({ "verdict": "inconclusive", "tries": tries }),
            };
            Ok(Outcome::ok(result))
        }
    }
}
