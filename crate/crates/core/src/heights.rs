//! Assembly of the explicit height-bound constants.
//!
//! The chain is: an upper bound for the archimedean δ-sum (either supplied
//! directly or derived from a Faltings-height bound on the jacobian), the
//! fibral terms φ_p·log Nп, and a purely combinatorial constant combine
//! into M(X); dividing by 2gτ bounds the Néron–Tate height ĥ(j(P)) of
//! every rational point with trivial stabilizer; adding the model's height
//! constant c_X and halving converts that into a bound on the naive height
//! of the x-coordinate, which a finite search can exhaust.
//!
//! Everything here is double precision. Inputs are upper bounds, the
//! formulas are monotone in them, and a final additive slack is applied
//! upward on M and on the Néron–Tate bound, so floating error can only
//! loosen the results, never invalidate them. Heights are normalized to
//! the base field K throughout (no division by `[K:ℚ]`).

use crate::angles::TauResult;
use crate::rational::Rational;
use serde::{Deserialize, Serialize};

/// Additive slack applied upward to M(X) and to the Néron–Tate bound so
/// that double rounding cannot tip either below its true value.
pub const BOUND_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HeightError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("negative phi_p = {phi} at prime of norm {prime_norm}")]
    NegativePhip { prime_norm: u64, phi: f64 },
    #[error("tau = {0} is not positive; the height bound does not apply")]
    TauNotPositive(f64),
}

/// The archimedean input route: either an upper bound for the δ-sum
/// Σ_v δ(X_v) itself, or an upper bound for the Faltings height h_K(J)
/// from which the δ-sum is bounded via [`delta_sum_from_faltings`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArchimedeanInput {
    DeltaSum { value: f64 },
    FaltingsHeight { value: f64 },
}

impl ArchimedeanInput {
    pub fn kind(&self) -> &'static str {
        match self {
            ArchimedeanInput::DeltaSum { .. } => "delta_sum",
            ArchimedeanInput::FaltingsHeight { .. } => "faltings_height",
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            ArchimedeanInput::DeltaSum { value } => value,
            ArchimedeanInput::FaltingsHeight { value } => value,
        }
    }
}

/// Universal lower bound for the δ-sum: δ(Y) ≥ −2g·log(2π⁴) for a single
/// surface, summed over the degK embeddings.
pub fn wilms_floor(g: u64, deg_k: u64) -> Result<f64, HeightError> {
    check_positive_ints(&[("g", g, 1), ("deg_k", deg_k, 1)])?;
    let two_pi4 = 2.0 * std::f64::consts::PI.powi(4);
    Ok(-2.0 * deg_k as f64 * g as f64 * two_pi4.ln())
}

/// Upper bound for Σ_v δ(X_v) from an upper bound for the Faltings height
/// of the jacobian: 12·h_K(J) + 4g·degK·log(2π).
pub fn delta_sum_from_faltings(g: u64, deg_k: u64, h_j_upper: f64) -> Result<f64, HeightError> {
    check_positive_ints(&[("g", g, 1), ("deg_k", deg_k, 1)])?;
    check_finite(&[("h_j_upper", h_j_upper)])?;
    Ok(12.0 * h_j_upper + 4.0 * g as f64 * deg_k as f64 * (2.0 * std::f64::consts::PI).ln())
}

/// Transport a Faltings-height upper bound across an isogeny of principally
/// polarized abelian varieties: h_K(A₁) ≤ h_K(A₂) + (degK/2)·log(deg φ).
pub fn faltings_upper_via_isogeny(
    h_target_upper: f64,
    deg_k: u64,
    isogeny_degree: u64,
) -> Result<f64, HeightError> {
    check_positive_ints(&[("deg_k", deg_k, 1), ("isogeny_degree", isogeny_degree, 1)])?;
    check_finite(&[("h_target_upper", h_target_upper)])?;
    Ok(h_target_upper + deg_k as f64 / 2.0 * (isogeny_degree as f64).ln())
}

/// Faltings height of a product of abelian varieties is the sum of the
/// factors' heights; in particular h(E×E) ≤ 2·(upper bound for h(E)).
pub fn product_faltings_upper(factor_uppers: &[f64]) -> f64 {
    factor_uppers.iter().sum()
}

/// The explicit constant M(X):
///
/// ((g−1)²/3)·max{6, g+1}·Σδ + 2(g+1)·Σ φ_p·log Nп
///   + 2·degK·g·(g−1)²·(3g·log g + 16),
///
/// evaluated on upper bounds and padded by [`BOUND_SLACK`].
pub fn m_constant(
    g: u64,
    deg_k: u64,
    delta_sum_upper: f64,
    fibral: &[(u64, f64)],
) -> Result<f64, HeightError> {
    check_positive_ints(&[("g", g, 2), ("deg_k", deg_k, 1)])?;
    check_finite(&[("delta_sum_upper", delta_sum_upper)])?;
    let mut fibral_sum = 0.0;
    for &(prime_norm, phi) in fibral {
        if prime_norm < 2 {
            return Err(HeightError::InvalidParams(format!(
                "prime norm {prime_norm} < 2"
            )));
        }
        if !phi.is_finite() || phi < 0.0 {
            return Err(HeightError::NegativePhip { prime_norm, phi });
        }
        fibral_sum += phi * (prime_norm as f64).ln();
    }
    let gf = g as f64;
    let archimedean = (gf - 1.0).powi(2) / 3.0 * 6f64.max(gf + 1.0) * delta_sum_upper;
    let fibral_term = 2.0 * (gf + 1.0) * fibral_sum;
    let constant = 2.0 * deg_k as f64 * gf * (gf - 1.0).powi(2) * (3.0 * gf * gf.ln() + 16.0);
    Ok(archimedean + fibral_term + constant + BOUND_SLACK)
}

/// The main bound: ĥ(j(P)) ≤ M(X)/(2gτ) for every rational point with
/// trivial stabilizer, provided τ > 0.
pub fn neron_tate_bound(m: f64, g: u64, tau: &TauResult) -> Result<f64, HeightError> {
    check_positive_ints(&[("g", g, 2)])?;
    if !m.is_finite() || m <= 0.0 {
        return Err(HeightError::InvalidParams(format!(
            "M = {m} must be positive"
        )));
    }
    if tau.tau <= 0.0 {
        return Err(HeightError::TauNotPositive(tau.tau));
    }
    Ok(m / (2.0 * g as f64 * tau.tau) + BOUND_SLACK)
}

/// Cosine form of the gap principle for two points of positive height:
/// cos θ ≤ M/(2g√(hP·hQ)) + (√(hP/hQ) + √(hQ/hP))/(2g).
pub fn gap_cos_bound(h_p: f64, h_q: f64, g: u64, m: f64) -> Result<f64, HeightError> {
    check_positive_ints(&[("g", g, 2)])?;
    check_finite(&[("h_p", h_p), ("h_q", h_q), ("m", m)])?;
    if h_p <= 0.0 || h_q <= 0.0 {
        return Err(HeightError::InvalidParams(format!(
            "heights must be positive, got {h_p} and {h_q}"
        )));
    }
    let two_g = 2.0 * g as f64;
    Ok(m / (two_g * (h_p * h_q).sqrt()) + ((h_p / h_q).sqrt() + (h_q / h_p).sqrt()) / two_g)
}

/// Defect form of the gap principle: hP + hQ − 2g·⟨j(P),j(Q)⟩ ≥ −M(X).
/// Returns the left-hand side and whether the inequality holds; a failure
/// flags inconsistent external height data.
pub fn gap_defect(h_p: f64, h_q: f64, pairing: f64, g: u64, m: f64) -> (f64, bool) {
    let lhs = h_p + h_q - 2.0 * g as f64 * pairing;
    (lhs, lhs >= -m)
}

/// Convert a Néron–Tate bound into a bound on the naive logarithmic height
/// of the x-coordinate: 2h(x(P)) ≤ ĥ(j(P)) + c_X.
pub fn x_height_bound(nt_bound: f64, c_x: f64) -> Result<f64, HeightError> {
    check_finite(&[("nt_bound", nt_bound), ("c_x", c_x)])?;
    Ok((nt_bound + c_x) / 2.0)
}

fn check_positive_ints(params: &[(&str, u64, u64)]) -> Result<(), HeightError> {
    for &(name, value, min) in params {
        if value < min {
            return Err(HeightError::InvalidParams(format!(
                "{name} = {value} must be >= {min}"
            )));
        }
    }
    Ok(())
}

fn check_finite(params: &[(&str, f64)]) -> Result<(), HeightError> {
    for &(name, value) in params {
        if !value.is_finite() {
            return Err(HeightError::InvalidParams(format!(
                "{name} = {value} is not finite"
            )));
        }
    }
    Ok(())
}

/// Whether the main theorem applies to the supplied data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Bounded,
    Inapplicable { reason: String },
}

/// One fibral contribution as it entered M(X).
#[derive(Debug, Clone, PartialEq)]
pub struct FibralTerm {
    pub prime_norm: u64,
    pub phi_p: Rational,
}

/// Full input provenance of a height-bound computation.
#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub genus: u64,
    pub deg_k: u64,
    pub rank_upper: u64,
    /// The rank actually fed to τ (rank 0 is handled as rank 1).
    pub rank_effective: u64,
    pub aut_order: u64,
    pub fibral: Vec<FibralTerm>,
    pub archimedean: ArchimedeanInput,
    /// The effective upper bound for Σ_v δ(X_v) after route conversion.
    pub delta_sum_upper: f64,
    pub height_constant: Option<f64>,
    pub warnings: Vec<String>,
}

/// The assembled bound report: M(X), the τ used, and the resulting height
/// bounds (absent when the theorem does not apply).
#[derive(Debug, Clone, PartialEq)]
pub struct HeightBoundReport {
    pub m: f64,
    pub tau_used: TauResult,
    pub verdict: Verdict,
    pub neron_tate_bound: Option<f64>,
    pub x_height_bound: Option<f64>,
    pub provenance: Provenance,
}
