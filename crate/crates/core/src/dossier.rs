//! Dossier ingestion, the end-to-end pipeline, and report rendering.
//!
//! A dossier is a single JSON document collecting everything the height
//! bound needs, in the form the data leaves external computer-algebra
//! systems: the curve invariants (genus, field degree, a rank upper bound,
//! the order of the automorphism subgroup), one fibre block per bad prime
//! (multiplicities, component genera, intersection matrix), the
//! archimedean input (a δ-sum bound or a Faltings-height bound for the
//! jacobian), and optionally the height constant c_X, a genus-2 sextic
//! model, automorphism generators, and a search bound.
//!
//! Keys:
//!
//! ```json
//! {
//!   "label": "...",
//!   "genus": 2, "deg_k": 1, "rank_upper": 2, "aut_order": 8,
//!   "fibres": [{"prime_norm": 2, "multiplicities": [..],
//!               "genera": [..], "intersection_matrix": [[..]]}],
//!   "archimedean": {"kind": "delta_sum" | "faltings_height", "value": -1.0},
//!   "height_constant": 4.08,
//!   "curve": {"coeffs": [a0, .., a6]},
//!   "automorphisms": [{"a": 0, "b": 1, "c": 1, "d": 0, "e": 1}],
//!   "search_bound": 10000
//! }
//! ```
//!
//! Rational entries (automorphism coefficients, curve coefficients) may be
//! JSON integers or strings like `"p/q"`; floats are rejected where
//! exactness matters. Reports render as human-readable text mirroring the
//! order of the computation, or as JSON in which every computed number
//! carries the name of the operation that produced it.

use crate::angles::{tau, TauResult};
use crate::curve::{
    classify_points, enumerate_points_parallel, group_closure, verify_automorphism, Automorphism,
    CurveError, CurvePoint, SexticCurve,
};
use crate::fibre::{phi_p, validate_fibre, FibreData, FibreError};
use crate::heights::{
    delta_sum_from_faltings, m_constant, neron_tate_bound, wilms_floor, x_height_bound,
    ArchimedeanInput, FibralTerm, HeightBoundReport, HeightError, Provenance, Verdict,
};
use crate::rational::{parse_rational, render_rational, BigInt, Rational, RationalMatrix};
use crate::AngleError;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DossierError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("dossier validation failed:\n  {}", issues.join("\n  "))]
    Validation { issues: Vec<String> },
    #[error(transparent)]
    Fibre(#[from] FibreError),
    #[error(transparent)]
    Angle(#[from] AngleError),
    #[error(transparent)]
    Height(#[from] HeightError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("pipeline error: {0}")]
    Pipeline(String),
}

/// Parsed and validated pipeline input.
#[derive(Debug, Clone)]
pub struct Dossier {
    pub label: String,
    pub genus: u64,
    pub deg_k: u64,
    pub rank_upper: u64,
    pub aut_order: u64,
    pub fibres: Vec<FibreData>,
    pub archimedean: ArchimedeanInput,
    pub height_constant: Option<f64>,
    pub curve: Option<SexticCurve>,
    pub automorphism_generators: Vec<Automorphism>,
    pub search_bound: Option<u64>,
}

// ---- wire format ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DossierWire {
    label: String,
    genus: u64,
    deg_k: u64,
    rank_upper: u64,
    aut_order: u64,
    #[serde(default)]
    fibres: Vec<FibreWire>,
    archimedean: ArchimedeanWire,
    #[serde(default)]
    height_constant: Option<f64>,
    #[serde(default)]
    curve: Option<CurveWire>,
    #[serde(default)]
    automorphisms: Vec<AutomorphismWire>,
    #[serde(default)]
    search_bound: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FibreWire {
    prime_norm: u64,
    multiplicities: Vec<u64>,
    genera: Vec<u64>,
    intersection_matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArchimedeanWire {
    kind: String,
    value: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveWire {
    coeffs: Vec<ExactNumber>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomorphismWire {
    a: ExactNumber,
    b: ExactNumber,
    c: ExactNumber,
    d: ExactNumber,
    e: ExactNumber,
}

/// An exact number on the wire: a JSON integer, or a string "p/q" / "p"
/// for full precision.
#[derive(Deserialize)]
#[serde(untagged)]
enum ExactNumber {
    Int(i64),
    Text(String),
}

impl ExactNumber {
    fn to_rational(&self) -> Result<Rational, String> {
        match self {
            ExactNumber::Int(v) => Ok(Rational::from_integer((*v).into())),
            ExactNumber::Text(s) => parse_rational(s).map_err(|e| e.to_string()),
        }
    }

    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            ExactNumber::Int(v) => Ok(BigInt::from(*v)),
            ExactNumber::Text(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| format!("cannot parse integer from {s:?}")),
        }
    }
}

/// Parse and validate a dossier. All fibre invariants are checked eagerly;
/// every problem found is reported, not just the first.
pub fn parse_dossier(bytes: &[u8]) -> Result<Dossier, DossierError> {
    let wire: DossierWire = serde_json::from_slice(bytes)?;
    let mut issues: Vec<String> = Vec::new();

    if wire.genus < 2 {
        issues.push(format!("genus = {} must be >= 2", wire.genus));
    }
    if wire.deg_k < 1 {
        issues.push("deg_k must be >= 1".to_string());
    }
    if wire.aut_order < 1 {
        issues.push("aut_order must be >= 1".to_string());
    }
    if let Some(c) = wire.height_constant {
        if !c.is_finite() {
            issues.push(format!("height_constant = {c} is not finite"));
        }
    }
    if let Some(b) = wire.search_bound {
        if b > i64::MAX as u64 {
            issues.push(format!("search_bound = {b} exceeds the supported range"));
        }
    }

    let archimedean = match wire.archimedean.kind.as_str() {
        "delta_sum" => Some(ArchimedeanInput::DeltaSum {
            value: wire.archimedean.value,
        }),
        "faltings_height" => Some(ArchimedeanInput::FaltingsHeight {
            value: wire.archimedean.value,
        }),
        other => {
            issues.push(format!(
                "archimedean.kind must be \"delta_sum\" or \"faltings_height\", got {other:?}"
            ));
            None
        }
    };
    if !wire.archimedean.value.is_finite() {
        issues.push(format!(
            "archimedean.value = {} is not finite",
            wire.archimedean.value
        ));
    }

    let mut fibres = Vec::new();
    for (index, fw) in wire.fibres.iter().enumerate() {
        let s = fw.multiplicities.len();
        let consistent = fw.genera.len() == s
            && fw.intersection_matrix.len() == s
            && fw.intersection_matrix.iter().all(|row| row.len() == s)
            && s >= 1;
        if !consistent {
            issues.push(format!(
                "fibre {index}: multiplicities ({}), genera ({}) and intersection matrix ({}x?) must agree in size",
                s,
                fw.genera.len(),
                fw.intersection_matrix.len()
            ));
            continue;
        }
        let matrix = RationalMatrix::from_i64_rows(&fw.intersection_matrix)
            .expect("consistent dimensions checked");
        let fibre = FibreData::new(fw.prime_norm, &fw.multiplicities, &fw.genera, matrix);
        let report = validate_fibre(&fibre, wire.genus);
        for failure in &report.failures {
            issues.push(format!(
                "fibre {index} (prime norm {}): {} check failed",
                fw.prime_norm, failure
            ));
        }
        fibres.push(fibre);
    }

    let curve = match &wire.curve {
        None => None,
        Some(cw) => {
            if wire.genus != 2 || wire.deg_k != 1 {
                issues.push("a curve model requires genus = 2 and deg_k = 1".to_string());
            }
            if cw.coeffs.len() != 7 {
                issues.push(format!(
                    "curve.coeffs must list a0..a6 (7 entries), got {}",
                    cw.coeffs.len()
                ));
                None
            } else {
                let mut coeffs: [BigInt; 7] = std::array::from_fn(|_| BigInt::from(0));
                let mut ok = true;
                for (i, raw) in cw.coeffs.iter().enumerate() {
                    match raw.to_bigint() {
                        Ok(v) => coeffs[i] = v,
                        Err(e) => {
                            issues.push(format!("curve.coeffs[{i}]: {e}"));
                            ok = false;
                        }
                    }
                }
                if ok {
                    match SexticCurve::new(coeffs) {
                        Ok(c) => Some(c),
                        Err(e) => {
                            issues.push(format!("curve: {e}"));
                            None
                        }
                    }
                } else {
                    None
                }
            }
        }
    };

    let mut generators = Vec::new();
    for (index, aw) in wire.automorphisms.iter().enumerate() {
        let parts: Result<Vec<Rational>, String> = [&aw.a, &aw.b, &aw.c, &aw.d, &aw.e]
            .iter()
            .map(|n| n.to_rational())
            .collect();
        match parts {
            Err(e) => issues.push(format!("automorphisms[{index}]: {e}")),
            Ok(v) => match Automorphism::new(
                v[0].clone(),
                v[1].clone(),
                v[2].clone(),
                v[3].clone(),
                v[4].clone(),
            ) {
                Ok(sigma) => generators.push(sigma),
                Err(e) => issues.push(format!("automorphisms[{index}]: {e}")),
            },
        }
    }

    if !issues.is_empty() {
        return Err(DossierError::Validation { issues });
    }
    Ok(Dossier {
        label: wire.label,
        genus: wire.genus,
        deg_k: wire.deg_k,
        rank_upper: wire.rank_upper,
        aut_order: wire.aut_order,
        fibres,
        archimedean: archimedean.expect("kind validated"),
        height_constant: wire.height_constant,
        curve,
        automorphism_generators: generators,
        search_bound: wire.search_bound,
    })
}

/// Per-fibre summary carried in the report.
#[derive(Debug, Clone, PartialEq)]
pub struct FibreSummary {
    pub prime_norm: u64,
    pub components: usize,
    pub mu_p: Rational,
    pub phi_p: Rational,
}

/// Point search results: what was enumerated and how it classifies.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub bound: u64,
    pub group_order: usize,
    pub points: Vec<CurvePoint>,
    pub trivial_stabilizer: Vec<CurvePoint>,
    pub nontrivial_stabilizer: Vec<CurvePoint>,
}

/// Everything `run_pipeline` produces.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineReport {
    pub label: String,
    pub fibres: Vec<FibreSummary>,
    pub height: HeightBoundReport,
    pub search: Option<SearchReport>,
}

/// Run every stage the dossier supports: φ_p per fibre, τ, the δ-sum
/// route, M(X), the Néron–Tate and x-height bounds, and (when a curve and
/// a search bound are present) the point search with stabilizer
/// classification.
///
/// A non-positive τ (or a subgroup of order < 3, for which the pigeonhole
/// behind the bound has no room) is not an error: the report carries an
/// "inapplicable" verdict and no height bounds.
pub fn run_pipeline(dossier: &Dossier, jobs: usize) -> Result<PipelineReport, DossierError> {
    let mut warnings = Vec::new();

    // Fibral invariants, exactly.
    let mut fibre_summaries = Vec::new();
    let mut fibral_terms = Vec::new();
    let mut fibral_f64 = Vec::new();
    for fibre in &dossier.fibres {
        let validation = validate_fibre(fibre, dossier.genus);
        let phi = phi_p(fibre, dossier.genus)?;
        let phi_f64 = phi.to_f64().ok_or_else(|| {
            DossierError::Pipeline(format!("phi_p at {} overflows f64", fibre.prime_norm))
        })?;
        fibre_summaries.push(FibreSummary {
            prime_norm: fibre.prime_norm,
            components: fibre.size(),
            mu_p: validation.mu_p.clone(),
            phi_p: phi.clone(),
        });
        fibral_terms.push(FibralTerm {
            prime_norm: fibre.prime_norm,
            phi_p: phi,
        });
        fibral_f64.push((fibre.prime_norm, phi_f64));
    }

    // The angle constant. Rank 0 still leaves the one-dimensional argument
    // available, so the effective rank is max(r, 1).
    let rank_effective = dossier.rank_upper.max(1);
    if dossier.aut_order < 2 {
        return Err(DossierError::Pipeline(
            "aut_order = 1: a trivial subgroup gives the pipeline nothing to work with".to_string(),
        ));
    }
    let tau_used: TauResult = tau(dossier.genus, rank_effective, dossier.aut_order)?;

    // Archimedean route.
    let delta_sum_upper = match dossier.archimedean {
        ArchimedeanInput::DeltaSum { value } => value,
        ArchimedeanInput::FaltingsHeight { value } => {
            delta_sum_from_faltings(dossier.genus, dossier.deg_k, value)?
        }
    };
    let floor = wilms_floor(dossier.genus, dossier.deg_k)?;
    if delta_sum_upper < floor {
        warnings.push(format!(
            "delta-sum upper bound {delta_sum_upper:.6} lies below the universal floor {floor:.6}; the archimedean input is contradictory"
        ));
    }

    let m = m_constant(dossier.genus, dossier.deg_k, delta_sum_upper, &fibral_f64)?;

    // Applicability: need a subgroup of order >= 3, tau > 0, and M > 0
    // (M can only fail to be positive on contradictory inputs, which the
    // floor warning above already called out).
    let (verdict, nt_bound) = if dossier.aut_order < 3 {
        (
            Verdict::Inapplicable {
                reason: format!("aut group order n = {} < 3", dossier.aut_order),
            },
            None,
        )
    } else if m <= 0.0 {
        (
            Verdict::Inapplicable {
                reason: format!("M(X) = {m:.6} <= 0 from contradictory inputs"),
            },
            None,
        )
    } else {
        match neron_tate_bound(m, dossier.genus, &tau_used) {
            Ok(bound) => (Verdict::Bounded, Some(bound)),
            Err(HeightError::TauNotPositive(t)) => (
                Verdict::Inapplicable {
                    reason: format!("tau = {t:.3e} <= 0"),
                },
                None,
            ),
            Err(other) => return Err(other.into()),
        }
    };
    let x_bound = match (nt_bound, dossier.height_constant) {
        (Some(nt), Some(c_x)) => Some(x_height_bound(nt, c_x)?),
        _ => None,
    };

    // Point search, independent of the verdict.
    let search = match (&dossier.curve, dossier.search_bound) {
        (Some(curve), Some(bound)) => {
            if bound > i64::MAX as u64 {
                return Err(DossierError::Pipeline(format!(
                    "search bound {bound} exceeds the supported range"
                )));
            }
            for (index, sigma) in dossier.automorphism_generators.iter().enumerate() {
                if !verify_automorphism(curve, sigma) {
                    return Err(DossierError::Pipeline(format!(
                        "automorphisms[{index}] {sigma} does not preserve the curve"
                    )));
                }
            }
            // The declared order is advisory for the closure; the cap only
            // guards against generators of infinite order.
            let cap = (4 * dossier.aut_order as usize).max(64);
            let group = group_closure(&dossier.automorphism_generators, cap)?;
            if group.len() != dossier.aut_order as usize {
                warnings.push(format!(
                    "closure of the listed generators has {} elements, dossier declares aut_order = {}",
                    group.len(),
                    dossier.aut_order
                ));
            }
            let points = enumerate_points_parallel(curve, bound, jobs.max(1));
            let (trivial, nontrivial) = classify_points(&group, &points);
            Some(SearchReport {
                bound,
                group_order: group.len(),
                points,
                trivial_stabilizer: trivial,
                nontrivial_stabilizer: nontrivial,
            })
        }
        _ => None,
    };

    let height = HeightBoundReport {
        m,
        tau_used,
        verdict,
        neron_tate_bound: nt_bound,
        x_height_bound: x_bound,
        provenance: Provenance {
            genus: dossier.genus,
            deg_k: dossier.deg_k,
            rank_upper: dossier.rank_upper,
            rank_effective,
            aut_order: dossier.aut_order,
            fibral: fibral_terms,
            archimedean: dossier.archimedean,
            delta_sum_upper,
            height_constant: dossier.height_constant,
            warnings,
        },
    };

    Ok(PipelineReport {
        label: dossier.label.clone(),
        fibres: fibre_summaries,
        height,
        search,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Render a pipeline report. Output is byte-identical across runs for
/// identical input.
pub fn render_report(report: &PipelineReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_text(report),
        ReportFormat::Json => serde_json::to_string_pretty(&ReportWire::from_report(report))
            .expect("report serialization cannot fail"),
    }
}

/// Round a displayed upper bound away from the value it bounds.
fn ceil_two_decimals(v: f64) -> f64 {
    (v * 100.0).ceil() / 100.0
}

fn render_text(report: &PipelineReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let h = &report.height;
    let p = &h.provenance;
    writeln!(out, "== dossier: {} ==", report.label).unwrap();
    writeln!(
        out,
        "inputs [dossier]: genus g = {}, deg_K = {}, rank upper bound r = {} (effective {}), subgroup order n = {}",
        p.genus, p.deg_k, p.rank_upper, p.rank_effective, p.aut_order
    )
    .unwrap();
    if report.fibres.is_empty() {
        writeln!(out, "fibres: none (good reduction everywhere)").unwrap();
    } else {
        writeln!(out, "fibres:").unwrap();
        for f in &report.fibres {
            writeln!(
                out,
                "  phi_p({}) = {}   [phi_p; mu_p = {}, {} components]",
                f.prime_norm,
                render_rational(&f.phi_p),
                render_rational(&f.mu_p),
                f.components
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        "archimedean route [dossier]: {} value = {}",
        p.archimedean.kind(),
        p.archimedean.value()
    )
    .unwrap();
    let delta_origin = match p.archimedean {
        ArchimedeanInput::DeltaSum { .. } => "dossier",
        ArchimedeanInput::FaltingsHeight { .. } => "delta_sum_from_faltings",
    };
    writeln!(
        out,
        "delta-sum upper bound = {:.6}   [{}]",
        p.delta_sum_upper, delta_origin
    )
    .unwrap();
    match h.tau_used.cos_theta_lower {
        Some(c) => writeln!(
            out,
            "tau = {:.8} (cos theta lower bound = {:.8}, method = {}, conservative = {})   [tau]",
            h.tau_used.tau, c, h.tau_used.method, h.tau_used.conservative
        )
        .unwrap(),
        None => writeln!(
            out,
            "tau = {:.8} (method = {}, conservative = {})   [tau]",
            h.tau_used.tau, h.tau_used.method, h.tau_used.conservative
        )
        .unwrap(),
    }
    writeln!(
        out,
        "M(X) <= {:.2} (value {:.6})   [m_constant]",
        ceil_two_decimals(h.m),
        h.m
    )
    .unwrap();
    match &h.verdict {
        Verdict::Bounded => {
            let nt = h
                .neron_tate_bound
                .expect("bounded verdict carries the bound");
            writeln!(
                out,
                "NT bound <= {:.2} (value {:.6}) on h^(j(P)) for trivial-stabilizer points   [neron_tate_bound]",
                ceil_two_decimals(nt),
                nt
            )
            .unwrap();
            match h.x_height_bound {
                Some(x) => writeln!(
                    out,
                    "x-height bound <= {:.2} (value {:.6})   [x_height_bound]",
                    ceil_two_decimals(x),
                    x
                )
                .unwrap(),
                None => writeln!(out, "x-height bound: not computed (no height_constant)").unwrap(),
            }
        }
        Verdict::Inapplicable { reason } => {
            writeln!(out, "verdict: {reason}: height bound does not apply").unwrap();
        }
    }
    for w in &p.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    if let Some(s) = &report.search {
        writeln!(
            out,
            "search [enumerate_points+classify_points]: B = {}, group order {}",
            s.bound, s.group_order
        )
        .unwrap();
        writeln!(
            out,
            "  points found: {} (trivial stabilizer: {}, nontrivial stabilizer: {})",
            s.points.len(),
            s.trivial_stabilizer.len(),
            s.nontrivial_stabilizer.len()
        )
        .unwrap();
        let join = |pts: &[CurvePoint]| {
            if pts.is_empty() {
                "(none)".to_string()
            } else {
                pts.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        writeln!(
            out,
            "  trivial-stabilizer points (complete up to B when the bound applies):"
        )
        .unwrap();
        writeln!(out, "    {}", join(&s.trivial_stabilizer)).unwrap();
        writeln!(
            out,
            "  nontrivial-stabilizer points (as found; no completeness claim):"
        )
        .unwrap();
        writeln!(out, "    {}", join(&s.nontrivial_stabilizer)).unwrap();
    }
    out
}

// ---- machine-readable report ----

#[derive(Serialize, Deserialize)]
struct TaggedF64 {
    value: f64,
    origin: String,
}

impl TaggedF64 {
    fn new(value: f64, origin: &str) -> Self {
        TaggedF64 {
            value,
            origin: origin.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TaggedRational {
    value: String,
    origin: String,
}

#[derive(Serialize, Deserialize)]
struct InputsWire {
    origin: String,
    genus: u64,
    deg_k: u64,
    rank_upper: u64,
    rank_effective: u64,
    aut_order: u64,
    archimedean_kind: String,
    archimedean_value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    height_constant: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct FibreOutWire {
    prime_norm: u64,
    components: usize,
    mu_p: TaggedRational,
    phi_p: TaggedRational,
}

#[derive(Serialize, Deserialize)]
struct TauWire {
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    cos_theta_lower: Option<f64>,
    method: String,
    conservative: bool,
    origin: String,
}

#[derive(Serialize, Deserialize)]
struct SearchWire {
    origin: String,
    bound: u64,
    group_order: usize,
    points: Vec<String>,
    trivial_stabilizer: Vec<String>,
    nontrivial_stabilizer: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    label: String,
    inputs: InputsWire,
    fibres: Vec<FibreOutWire>,
    delta_sum_upper: TaggedF64,
    tau: TauWire,
    m_constant: TaggedF64,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    neron_tate_bound: Option<TaggedF64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x_height_bound: Option<TaggedF64>,
    warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    search: Option<SearchWire>,
}

impl ReportWire {
    fn from_report(report: &PipelineReport) -> Self {
        let h = &report.height;
        let p = &h.provenance;
        let delta_origin = match p.archimedean {
            ArchimedeanInput::DeltaSum { .. } => "dossier",
            ArchimedeanInput::FaltingsHeight { .. } => "delta_sum_from_faltings",
        };
        ReportWire {
            label: report.label.clone(),
            inputs: InputsWire {
                origin: "dossier".to_string(),
                genus: p.genus,
                deg_k: p.deg_k,
                rank_upper: p.rank_upper,
                rank_effective: p.rank_effective,
                aut_order: p.aut_order,
                archimedean_kind: p.archimedean.kind().to_string(),
                archimedean_value: p.archimedean.value(),
                height_constant: p.height_constant,
            },
            fibres: report
                .fibres
                .iter()
                .map(|f| FibreOutWire {
                    prime_norm: f.prime_norm,
                    components: f.components,
                    mu_p: TaggedRational {
                        value: render_rational(&f.mu_p),
                        origin: "validate_fibre".to_string(),
                    },
                    phi_p: TaggedRational {
                        value: render_rational(&f.phi_p),
                        origin: "phi_p".to_string(),
                    },
                })
                .collect(),
            delta_sum_upper: TaggedF64::new(p.delta_sum_upper, delta_origin),
            tau: TauWire {
                value: h.tau_used.tau,
                cos_theta_lower: h.tau_used.cos_theta_lower,
                method: h.tau_used.method.name().to_string(),
                conservative: h.tau_used.conservative,
                origin: "tau".to_string(),
            },
            m_constant: TaggedF64::new(h.m, "m_constant"),
            verdict: h.verdict.clone(),
            neron_tate_bound: h
                .neron_tate_bound
                .map(|v| TaggedF64::new(v, "neron_tate_bound")),
            x_height_bound: h
                .x_height_bound
                .map(|v| TaggedF64::new(v, "x_height_bound")),
            warnings: p.warnings.clone(),
            search: report.search.as_ref().map(|s| SearchWire {
                origin: "enumerate_points+classify_points".to_string(),
                bound: s.bound,
                group_order: s.group_order,
                points: s.points.iter().map(|p| p.to_string()).collect(),
                trivial_stabilizer: s.trivial_stabilizer.iter().map(|p| p.to_string()).collect(),
                nontrivial_stabilizer: s
                    .nontrivial_stabilizer
                    .iter()
                    .map(|p| p.to_string())
                    .collect(),
            }),
        }
    }
}
