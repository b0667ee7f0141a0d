//! Special-fibre data of a minimal regular model and the fibral invariant
//! φ_p computed from it.
//!
//! A bad fibre is described by the reduced irreducible components C_1..C_s
//! of the model at a prime: their multiplicities m_j, arithmetic genera g_j,
//! and the symmetric integer matrix of geometric intersections [C_i.C_j].
//! For every component of multiplicity one there is a linear system Ξ_k
//! (the intersection rows plus the coefficient-sum-zero constraint) whose
//! unique rational solution b^(k) is the fibral correction of ω − 2(g−1)D
//! for a point reducing to C_k; φ_p is the largest |self-intersection| of
//! those corrections. The invariant vanishes when the fibre is irreducible,
//! so only bad primes contribute.
//!
//! Validation is diagnostic rather than fail-fast: fibre data is assembled
//! by hand from computer-algebra output, and a report naming every violated
//! invariant is far more useful than the first panic.

use crate::rational::{bilinear_form, solve_exact, Rational, RationalError, RationalMatrix};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibreError {
    #[error("divisor has nonzero fibre degree: sum of m_i*d_i = {0}")]
    DegreeNotZero(String),
    #[error("component {index} has multiplicity {multiplicity}, expected 1")]
    MultiplicityNotOne { index: usize, multiplicity: u64 },
    #[error("component index {index} out of range for a fibre with {size} components")]
    ComponentOutOfRange { index: usize, size: usize },
    #[error("no component has multiplicity 1 (J_p is empty)")]
    EmptyJp,
    #[error(transparent)]
    Arithmetic(#[from] RationalError),
}

/// One reduced irreducible component of a special fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreComponent {
    pub multiplicity: u64,
    pub genus: u64,
}

/// A bad prime's special fibre: residue-field cardinality, components, and
/// the geometric intersection matrix in component order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreData {
    pub prime_norm: u64,
    pub components: Vec<FibreComponent>,
    pub intersection: RationalMatrix,
}

impl FibreData {
    pub fn new(
        prime_norm: u64,
        multiplicities: &[u64],
        genera: &[u64],
        intersection: RationalMatrix,
    ) -> Self {
        let components = multiplicities
            .iter()
            .zip(genera)
            .map(|(&multiplicity, &genus)| FibreComponent {
                multiplicity,
                genus,
            })
            .collect();
        FibreData {
            prime_norm,
            components,
            intersection,
        }
    }

    pub fn size(&self) -> usize {
        self.components.len()
    }

    /// Indices of the multiplicity-one components (the set J_p). A rational
    /// point always reduces to one of these.
    pub fn multiplicity_one_indices(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.multiplicity == 1)
            .map(|(j, _)| j)
            .collect()
    }

    fn dims_consistent(&self) -> bool {
        let s = self.size();
        s >= 1 && self.intersection.rows() == s && self.intersection.cols() == s
    }
}

/// Named invariant checks performed by [`validate_fibre`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibreCheck {
    PrimeNormRange,
    MultiplicityPositive,
    Dimensions,
    Integrality,
    Symmetry,
    OffDiagonalSign,
    DiagonalSign,
    FibreTriviality,
    Connectivity,
    GenusIdentity,
}

impl FibreCheck {
    pub fn name(self) -> &'static str {
        match self {
            FibreCheck::PrimeNormRange => "prime-norm-range",
            FibreCheck::MultiplicityPositive => "multiplicity-positive",
            FibreCheck::Dimensions => "dimensions",
            FibreCheck::Integrality => "integrality",
            FibreCheck::Symmetry => "symmetry",
            FibreCheck::OffDiagonalSign => "off-diagonal-sign",
            FibreCheck::DiagonalSign => "diagonal-sign",
            FibreCheck::FibreTriviality => "fibre-triviality",
            FibreCheck::Connectivity => "connectivity",
            FibreCheck::GenusIdentity => "genus-identity",
        }
    }
}

impl fmt::Display for FibreCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of validating one fibre: the multiplicity-weighted diagonal sum
/// μ_p, the genus the fibre implies, and every violated check by name.
#[derive(Debug, Clone, PartialEq)]
pub struct FibreValidationReport {
    pub genus_from_fibre: Rational,
    pub mu_p: Rational,
    pub failures: Vec<FibreCheck>,
}

impl FibreValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check every structural invariant of a special fibre against the claimed
/// curve genus. Violations are collected, not thrown.
pub fn validate_fibre(fibre: &FibreData, genus: u64) -> FibreValidationReport {
    let mut failures = Vec::new();
    let s = fibre.size();

    if fibre.prime_norm < 2 {
        failures.push(FibreCheck::PrimeNormRange);
    }
    if fibre.components.iter().any(|c| c.multiplicity == 0) {
        failures.push(FibreCheck::MultiplicityPositive);
    }
    if !fibre.dims_consistent() {
        failures.push(FibreCheck::Dimensions);
        return FibreValidationReport {
            genus_from_fibre: Rational::zero(),
            mu_p: Rational::zero(),
            failures,
        };
    }

    let m = &fibre.intersection;
    if !m.is_integral() {
        failures.push(FibreCheck::Integrality);
    }
    if !m.is_symmetric() {
        failures.push(FibreCheck::Symmetry);
    }
    let off_diagonal_ok = (0..s).all(|i| (0..s).all(|j| i == j || !m.get(i, j).is_negative()));
    if !off_diagonal_ok {
        failures.push(FibreCheck::OffDiagonalSign);
    }
    let diagonal_ok = if s == 1 {
        m.get(0, 0).is_zero()
    } else {
        (0..s).all(|i| !m.get(i, i).is_positive())
    };
    if !diagonal_ok {
        failures.push(FibreCheck::DiagonalSign);
    }

    // Numerical triviality: F_p = sum m_j C_j meets every component in 0.
    let multiplicities: Vec<Rational> = fibre
        .components
        .iter()
        .map(|c| Rational::from_integer(c.multiplicity.into()))
        .collect();
    let trivial = (0..s).all(|i| {
        (0..s)
            .map(|j| &multiplicities[j] * m.get(i, j))
            .fold(Rational::zero(), |acc, t| acc + t)
            .is_zero()
    });
    if !trivial {
        failures.push(FibreCheck::FibreTriviality);
    }

    if !positive_graph_connected(m, s) {
        failures.push(FibreCheck::Connectivity);
    }

    // mu_p = -sum m_j [C_j.C_j], and 2(g-1) = mu_p + sum 2(g_j - 1) m_j.
    let mu_p = -(0..s)
        .map(|j| &multiplicities[j] * m.get(j, j))
        .fold(Rational::zero(), |acc, t| acc + t);
    let genus_term: Rational = fibre
        .components
        .iter()
        .map(|c| {
            Rational::from_integer(
                (2 * (i128::from(c.genus) - 1) * i128::from(c.multiplicity)).into(),
            )
        })
        .fold(Rational::zero(), |acc, t| acc + t);
    let rhs = &mu_p + &genus_term;
    let lhs = Rational::from_integer((2 * (i128::from(genus) - 1)).into());
    if lhs != rhs {
        failures.push(FibreCheck::GenusIdentity);
    }
    let genus_from_fibre = Rational::one() + rhs / Rational::from_integer(2.into());

    FibreValidationReport {
        genus_from_fibre,
        mu_p,
        failures,
    }
}

fn positive_graph_connected(m: &RationalMatrix, s: usize) -> bool {
    if s <= 1 {
        return true;
    }
    let mut seen = vec![false; s];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for (j, seen_j) in seen.iter_mut().enumerate() {
            if i != j && !*seen_j && (m.get(i, j).is_positive() || m.get(j, i).is_positive()) {
                *seen_j = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|v| v)
}

/// The fibral correction of a degree-zero divisor: the unique coefficient
/// vector `a` with `Σ a_j = 0` and `Σ_j a_j [C_i.C_j] = d_i` for every i,
/// where `d` collects the geometric intersections of the divisor with the
/// fibre components.
pub fn phi_correction(fibre: &FibreData, d: &[Rational]) -> Result<Vec<Rational>, FibreError> {
    let s = fibre.size();
    if !fibre.dims_consistent() || d.len() != s {
        return Err(RationalError::DimensionMismatch(format!(
            "fibre with {s} components, intersection {}x{}, rhs length {}",
            fibre.intersection.rows(),
            fibre.intersection.cols(),
            d.len()
        ))
        .into());
    }
    let degree = fibre
        .components
        .iter()
        .zip(d)
        .map(|(c, di)| Rational::from_integer(c.multiplicity.into()) * di)
        .fold(Rational::zero(), |acc, t| acc + t);
    if !degree.is_zero() {
        return Err(FibreError::DegreeNotZero(degree.to_string()));
    }
    solve_sum_zero_system(fibre, d)
}

fn solve_sum_zero_system(fibre: &FibreData, rhs: &[Rational]) -> Result<Vec<Rational>, FibreError> {
    let s = fibre.size();
    let mut rows: Vec<Vec<Rational>> = (0..s).map(|i| fibre.intersection.row(i).to_vec()).collect();
    rows.push(vec![Rational::one(); s]);
    let mut b = rhs.to_vec();
    b.push(Rational::zero());
    let system = RationalMatrix::from_rows(&rows).map_err(FibreError::Arithmetic)?;
    Ok(solve_exact(&system, &b)?)
}

/// Solve the system Ξ_k for the multiplicity-one component C_k (0-based).
///
/// The right-hand side of row i is `2(g_i − 1) − (2/m_i)(g−1)δ_{i,k} −
/// [C_i.C_i]`, and the solution is constrained to have coefficient sum zero.
pub fn xi_solution(fibre: &FibreData, genus: u64, k: usize) -> Result<Vec<Rational>, FibreError> {
    let s = fibre.size();
    if k >= s {
        return Err(FibreError::ComponentOutOfRange { index: k, size: s });
    }
    if !fibre.dims_consistent() {
        return Err(RationalError::DimensionMismatch(format!(
            "fibre with {s} components, intersection {}x{}",
            fibre.intersection.rows(),
            fibre.intersection.cols()
        ))
        .into());
    }
    let multiplicity = fibre.components[k].multiplicity;
    if multiplicity != 1 {
        return Err(FibreError::MultiplicityNotOne {
            index: k,
            multiplicity,
        });
    }
    let rhs = xi_rhs(fibre, genus, k);
    solve_sum_zero_system(fibre, &rhs)
}

/// Right-hand side of the system Ξ_k (exposed for diagnostics and tests).
pub fn xi_rhs(fibre: &FibreData, genus: u64, k: usize) -> Vec<Rational> {
    let g = i128::from(genus);
    (0..fibre.size())
        .map(|i| {
            let component = &fibre.components[i];
            let genus_part = Rational::from_integer((2 * (i128::from(component.genus) - 1)).into());
            let delta_part = if i == k {
                Rational::new(
                    (2 * (g - 1)).into(),
                    i128::from(component.multiplicity).into(),
                )
            } else {
                Rational::zero()
            };
            genus_part - delta_part - fibre.intersection.get(i, i)
        })
        .collect()
}

/// The invariant φ_p: the largest |self-intersection| of the Ξ_k solutions
/// over all multiplicity-one components. Zero for an irreducible fibre.
///
/// Assumes the fibre passed [`validate_fibre`]; on inconsistent data the
/// underlying solver errors propagate.
pub fn phi_p(fibre: &FibreData, genus: u64) -> Result<Rational, FibreError> {
    let jp = fibre.multiplicity_one_indices();
    if jp.is_empty() {
        return Err(FibreError::EmptyJp);
    }
    let mut best = Rational::zero();
    for k in jp {
        let b = xi_solution(fibre, genus, k)?;
        let self_intersection = bilinear_form(&b, &fibre.intersection, &b)?;
        let value = self_intersection.abs();
        if value > best {
            best = value;
        }
    }
    Ok(best)
}
