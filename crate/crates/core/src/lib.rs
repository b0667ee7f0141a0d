//! Explicit Néron–Tate height bounds for rational points on curves whose
//! automorphism group is large compared to the Mordell–Weil rank of the
//! jacobian, together with the desk-scale point search that the bounds make
//! possible for genus-2 sextic models over ℚ.
//!
//! The pipeline goes: special-fibre data of a minimal regular model (one
//! [`FibreData`] per bad prime) → the fibral invariant φ_p ([`fibre`]) →
//! the angle constant τ(g,r,n) ([`angles`]) → the explicit constant M(X)
//! and the height-bound chain ([`heights`]) → exhaustive enumeration and
//! automorphism classification of rational points ([`curve`]). The
//! [`dossier`] module ties the stages together behind a single JSON input
//! file and renders the resulting report.
//!
//! All fibral computations are exact (arbitrary-precision rationals); the
//! archimedean and angle constants are doubles with all roundings taken in
//! the direction that can only loosen, never invalidate, the final bound.

pub mod angles;
pub mod curve;
pub mod dossier;
pub mod fibre;
pub mod heights;
pub mod rational;

pub use angles::{cap_area_fraction, cap_cos_lower, tau, AngleError, TauMethod, TauResult};
pub use curve::{
    apply_automorphism, classify_points, enumerate_points, enumerate_points_parallel,
    group_closure, is_on_curve, stabilizer, verify_automorphism, Automorphism, CurveError,
    CurvePoint, SexticCurve,
};
pub use dossier::{
    parse_dossier, render_report, run_pipeline, Dossier, DossierError, PipelineReport,
    ReportFormat, SearchReport,
};
pub use fibre::{
    phi_correction, phi_p, validate_fibre, xi_solution, FibreCheck, FibreComponent, FibreData,
    FibreError, FibreValidationReport,
};
pub use heights::{
    delta_sum_from_faltings, faltings_upper_via_isogeny, gap_cos_bound, gap_defect, m_constant,
    neron_tate_bound, product_faltings_upper, wilms_floor, x_height_bound, ArchimedeanInput,
    HeightBoundReport, HeightError, Provenance, Verdict,
};
pub use rational::{
    bilinear_form, integer_sqrt, parse_rational, render_rational, solve_exact, BigInt, Rational,
    RationalError, RationalMatrix,
};
