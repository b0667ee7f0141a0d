//! The angle constant τ(g,r,n) = cos θ(r,n) − 1/g, where θ(r,n) is the
//! largest minimal pairwise angle achievable by n distinct unit vectors in
//! ℝ^r (a spherical-code quantity), and τ = 1 − 1/g by definition when
//! r = 1.
//!
//! For r = 2 the optimum is the regular n-gon, so θ(2,n) = 2π/n exactly.
//! For r ≥ 3 exact values are mostly unknown; instead of consulting code
//! tables we certify a conservative bound: n points with pairwise angles
//! ≥ α carve n disjoint caps of angular radius α/2 out of the unit sphere,
//! so the largest α whose caps still fit dominates θ(r,n) and its cosine
//! is a valid lower bound for cos θ(r,n). Underestimating τ only loosens
//! the final height bound, so every rounding here goes downward.

use std::fmt;

/// Downward slack absorbing double-precision evaluation error wherever a
/// cosine feeds τ. Overestimating τ could certify a bound the theorem does
/// not give (the n-gon value is exactly 0 at g = 2, n = 6, and the f64
/// cosine lands a hair above it); underestimating only loosens the bound.
const CAP_SAFETY_MARGIN: f64 = 1e-9;
/// Bisection stops once the bracket on α is this narrow (radians).
const BISECTION_WIDTH: f64 = 1e-10;
/// Absolute error target for the adaptive quadrature used when r ≥ 4.
const QUADRATURE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AngleError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// How a τ value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauMethod {
    /// r = 1: τ = 1 − 1/g by definition.
    RankOneRule,
    /// r = 2: the regular n-gon is optimal, cos θ = cos(2π/n).
    ExactPolygon,
    /// r ≥ 3: certified spherical-cap packing lower bound on cos θ.
    CapPacking,
}

impl TauMethod {
    pub fn name(self) -> &'static str {
        match self {
            TauMethod::RankOneRule => "rank-one-rule",
            TauMethod::ExactPolygon => "exact-polygon",
            TauMethod::CapPacking => "cap-packing",
        }
    }
}

impl fmt::Display for TauMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// τ(g,r,n) with its certification pedigree. When `conservative` is set the
/// reported value is ≤ the true τ, which is the safe direction: a smaller τ
/// gives a larger, still valid, height bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TauResult {
    pub tau: f64,
    pub cos_theta_lower: Option<f64>,
    pub method: TauMethod,
    pub conservative: bool,
}

/// Compute τ(g,r,n).
pub fn tau(g: u64, r: u64, n: u64) -> Result<TauResult, AngleError> {
    if g < 2 || r < 1 || n < 2 {
        return Err(AngleError::InvalidParams(format!(
            "need g >= 2, r >= 1, n >= 2; got g={g}, r={r}, n={n}"
        )));
    }
    let inv_g = 1.0 / g as f64;
    Ok(match r {
        1 => TauResult {
            tau: 1.0 - inv_g,
            cos_theta_lower: None,
            method: TauMethod::RankOneRule,
            conservative: false,
        },
        2 => {
            let cos_theta = (2.0 * std::f64::consts::PI / n as f64).cos() - CAP_SAFETY_MARGIN;
            TauResult {
                tau: cos_theta - inv_g,
                cos_theta_lower: Some(cos_theta),
                method: TauMethod::ExactPolygon,
                conservative: true,
            }
        }
        _ => {
            let cos_lower = cap_cos_lower(r, n)?;
            TauResult {
                tau: cos_lower - inv_g,
                cos_theta_lower: Some(cos_lower),
                method: TauMethod::CapPacking,
                conservative: true,
            }
        }
    })
}

/// Normalized measure of a spherical cap of angular radius `rho` on the
/// unit sphere in ℝ^r: ∫₀^ρ sin^{r−2} / ∫₀^π sin^{r−2}. Monotone in `rho`,
/// exactly 1/2 at the equator.
pub fn cap_area_fraction(r: u64, rho: f64) -> Result<f64, AngleError> {
    if r < 2 {
        return Err(AngleError::InvalidParams(format!(
            "cap fraction needs r >= 2, got {r}"
        )));
    }
    if !rho.is_finite() || !(0.0..=std::f64::consts::PI).contains(&rho) {
        return Err(AngleError::InvalidParams(format!(
            "cap radius must lie in [0, pi], got {rho}"
        )));
    }
    Ok(match r {
        2 => rho / std::f64::consts::PI,
        3 => (1.0 - rho.cos()) / 2.0,
        _ => {
            let power = (r - 2).min(i32::MAX as u64) as i32;
            let f = |t: f64| t.sin().powi(power);
            let numerator = adaptive_simpson(&f, 0.0, rho, QUADRATURE_TOL);
            let denominator = adaptive_simpson(&f, 0.0, std::f64::consts::PI, QUADRATURE_TOL);
            numerator / denominator
        }
    })
}

/// Certified lower bound for cos θ(r,n) via cap packing: bisect for the
/// largest α whose n caps of radius α/2 fit on the sphere, take the
/// feasible endpoint, and round the cosine down by a safety margin.
///
/// `r = 2` is accepted as a cross-check mode (the bound then reproduces the
/// exact polygon value 2π/n); [`tau`] never routes r = 2 through here.
pub fn cap_cos_lower(r: u64, n: u64) -> Result<f64, AngleError> {
    if r < 2 || n < 2 {
        return Err(AngleError::InvalidParams(format!(
            "cap bound needs r >= 2, n >= 2; got r={r}, n={n}"
        )));
    }
    let feasible = |alpha: f64| -> Result<bool, AngleError> {
        Ok(n as f64 * cap_area_fraction(r, alpha / 2.0)? <= 1.0)
    };
    let mut lo = 0.0f64;
    let mut hi = std::f64::consts::PI;
    if feasible(hi)? {
        // Two antipodal points always fit; nothing to bisect.
        lo = hi;
    } else {
        while hi - lo > BISECTION_WIDTH {
            let mid = 0.5 * (lo + hi);
            if feasible(mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    Ok((lo.cos() - CAP_SAFETY_MARGIN).clamp(-1.0, 1.0))
}

/// Plain adaptive Simpson quadrature with interval-halving error control.
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &impl Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
        }
    }
    if a == b {
        return 0.0;
    }
    let (fa, fb) = (f(a), f(b));
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 40)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    const TIGHT: f64 = 1e-12;

    #[test]
    fn tau_rank_one() {
        let t = tau(2, 1, 3).unwrap();
        assert_eq!(t.tau, 0.5);
        assert_eq!(t.method, TauMethod::RankOneRule);
        assert_eq!(t.cos_theta_lower, None);
        assert!(!t.conservative);
    }

    #[test]
    fn tau_octagon() {
        let t = tau(2, 2, 8).unwrap();
        let expected = (PI / 4.0).cos() - 0.5;
        assert!(t.tau <= expected);
        assert!(expected - t.tau < 2e-9);
        assert!((t.tau - 0.2071).abs() < 1e-4);
        assert_eq!(t.method, TauMethod::ExactPolygon);
    }

    #[test]
    fn tau_hexagon_vanishes() {
        // The true value is exactly 0; the evaluation slack must leave the
        // reported value at or just below it, never above.
        let t = tau(2, 2, 6).unwrap();
        assert!(t.tau <= 0.0, "tau = {}", t.tau);
        assert!(t.tau.abs() < 2e-9, "tau = {}", t.tau);
    }

    #[test]
    fn tau_rejects_bad_params() {
        assert!(tau(1, 2, 8).is_err());
        assert!(tau(2, 0, 8).is_err());
        assert!(tau(2, 2, 1).is_err());
    }

    #[test]
    fn cap_fraction_circle_is_linear() {
        for &rho in &[0.0, 0.3, 1.0, PI] {
            assert!((cap_area_fraction(2, rho).unwrap() - rho / PI).abs() < TIGHT);
        }
    }

    #[test]
    fn cap_fraction_sphere_closed_form() {
        for &rho in &[0.0, 0.7, PI / 2.0, 2.5, PI] {
            let expected = (1.0 - rho.cos()) / 2.0;
            assert!((cap_area_fraction(3, rho).unwrap() - expected).abs() < TIGHT);
        }
    }

    #[test]
    fn cap_fraction_quadrature_against_closed_forms() {
        // r = 4: integral of sin^2 is (rho - sin rho cos rho)/2, total pi/2.
        // r = 5: integral of sin^3 is 2/3 - cos rho + cos^3 rho / 3, total 4/3.
        for &rho in &[0.2, 1.1, PI / 2.0, 2.9] {
            let r4 = (rho - rho.sin() * rho.cos()) / PI;
            assert!((cap_area_fraction(4, rho).unwrap() - r4).abs() < 1e-11);
            let r5 = (2.0 / 3.0 - rho.cos() + rho.cos().powi(3) / 3.0) / (4.0 / 3.0);
            assert!((cap_area_fraction(5, rho).unwrap() - r5).abs() < 1e-11);
        }
    }

    #[test]
    fn cap_fraction_half_at_equator() {
        for r in 2..12 {
            let v = cap_area_fraction(r, PI / 2.0).unwrap();
            assert!((v - 0.5).abs() < 1e-11, "r = {r}: {v}");
        }
    }

    #[test]
    fn cap_fraction_rejects_bad_params() {
        assert!(cap_area_fraction(1, 0.5).is_err());
        assert!(cap_area_fraction(3, -0.1).is_err());
        assert!(cap_area_fraction(3, PI + 0.1).is_err());
    }

    #[test]
    fn cap_cos_lower_sphere_closed_form() {
        // For r = 3 the cap fraction is elementary, so the feasibility
        // threshold is cos(alpha/2) = 1 - 2/n and cos(alpha) = 2(1-2/n)^2 - 1.
        for n in [3u64, 4, 6, 9, 24] {
            let expected = 2.0 * (1.0 - 2.0 / n as f64).powi(2) - 1.0;
            let got = cap_cos_lower(3, n).unwrap();
            assert!(got <= expected, "n = {n}: {got} > {expected}");
            assert!(expected - got < 1e-8, "n = {n}: {got} vs {expected}");
        }
    }

    #[test]
    fn cap_cos_lower_antipodal_pair() {
        assert_eq!(cap_cos_lower(3, 2).unwrap(), -1.0);
    }

    #[test]
    fn cap_cos_lower_circle_matches_polygon() {
        for n in 3u64..=20 {
            let exact = (2.0 * PI / n as f64).cos();
            let got = cap_cos_lower(2, n).unwrap();
            assert!(got < exact, "n = {n}");
            assert!(exact - got < 1e-8, "n = {n}: {got} vs {exact}");
        }
    }

    #[test]
    fn cap_cos_lower_octahedron_safe_side() {
        // True theta(3,6) is pi/2 (octahedron), so the bound must be <= 0.
        assert!(cap_cos_lower(3, 6).unwrap() <= 0.0);
    }

    #[test]
    fn tau_uses_cap_bound_for_r3() {
        let t = tau(2, 3, 6).unwrap();
        assert_eq!(t.method, TauMethod::CapPacking);
        assert!(t.conservative);
        let expected = 2.0 * (1.0 - 2.0 / 6.0f64).powi(2) - 1.0 - 0.5;
        assert!((t.tau - expected).abs() < 1e-7);
    }

    proptest! {
        #[test]
        fn cap_fraction_monotone(r in 2u64..8, a in 0.0f64..PI, b in 0.0f64..PI) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let fl = cap_area_fraction(r, lo).unwrap();
            let fh = cap_area_fraction(r, hi).unwrap();
            prop_assert!(fl <= fh + 1e-12);
        }

        #[test]
        fn tau_monotone_in_n_for_polygon(g in 2u64..6, n in 3u64..40) {
            let a = tau(g, 2, n).unwrap().tau;
            let b = tau(g, 2, n + 1).unwrap().tau;
            prop_assert!(a <= b + 1e-12);
        }

        #[test]
        fn tau_increasing_in_g(r in 1u64..5, n in 3u64..16, g in 2u64..8) {
            let a = tau(g, r, n).unwrap().tau;
            let b = tau(g + 1, r, n).unwrap().tau;
            prop_assert!(a < b);
        }
    }
}
