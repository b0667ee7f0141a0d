//! Exact rational arithmetic, linear solving, bilinear forms, and integer
//! perfect-square detection.
//!
//! Everything here is exact: the fibral invariants downstream are rational
//! numbers whose sign and magnitude feed a theorem, so no floating point is
//! allowed anywhere in this module. Matrices are small (a special fibre has
//! a few dozen components at most), so plain rational Gaussian elimination
//! with a numerator-magnitude pivot heuristic is the whole story.

use num_bigint::Sign;
use num_traits::{One, Zero};
use std::fmt;

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (both guaranteed by the underlying representation).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system is inconsistent (no solution)")]
    NoSolution,
    #[error("linear system has a nontrivial kernel (no unique solution)")]
    NonUniqueSolution,
    #[error("negative input to integer square root")]
    NegativeInput,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Parse "p/q" or "p" into a reduced rational. Whitespace around the
/// number and the slash is accepted.
pub fn parse_rational(text: &str) -> Result<Rational, RationalError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .parse::<Rational>()
        .map_err(|_| RationalError::Parse(text.to_string()))
}

/// Render as "p/q", omitting the denominator when it is 1.
pub fn render_rational(q: &Rational) -> String {
    q.to_string()
}

/// A dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, RationalError> {
        if entries.len() != rows * cols {
            return Err(RationalError::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self, RationalError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(RationalError::DimensionMismatch("ragged rows".to_string()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, RationalError> {
        let converted: Vec<Vec<Rational>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        Self::from_rows(&converted)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        RationalMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Matrix-vector product A·x.
    pub fn mul_vector(&self, x: &[Rational]) -> Result<Vec<Rational>, RationalError> {
        if x.len() != self.cols {
            return Err(RationalError::DimensionMismatch(format!(
                "matrix has {} columns, vector has {}",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(render_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solve A·x = b exactly, requiring the solution to exist and be unique.
///
/// The system may be overdetermined: elimination runs on all rows, and the
/// residual of every equation is re-checked against the candidate solution
/// before it is returned. Pivots are chosen by largest numerator magnitude
/// among the nonzero candidates in the column.
pub fn solve_exact(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>, RationalError> {
    let (m, n) = (a.rows(), a.cols());
    if b.len() != m {
        return Err(RationalError::DimensionMismatch(format!(
            "matrix has {m} rows, rhs has {}",
            b.len()
        )));
    }
    if n == 0 {
        return if b.iter().all(|v| v.is_zero()) {
            Ok(Vec::new())
        } else {
            Err(RationalError::NoSolution)
        };
    }

    // Augmented matrix, reduced in place to RREF.
    let mut aug: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut rank = 0usize;
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let pivot = (rank..m)
            .filter(|&r| !aug[r][col].is_zero())
            .max_by(|&r1, &r2| {
                let m1 = aug[r1][col].numer().magnitude();
                let m2 = aug[r2][col].numer().magnitude();
                m1.cmp(m2)
            });
        let Some(pivot) = pivot else { continue };
        aug.swap(rank, pivot);

        let inv = aug[rank][col].recip();
        for entry in aug[rank].iter_mut() {
            *entry *= &inv;
        }
        let (above, rest) = aug.split_at_mut(rank);
        let (pivot_row, below) = rest.split_first_mut().expect("pivot row exists");
        for row in above.iter_mut().chain(below.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pivot_entry) in row[col..=n].iter_mut().zip(&pivot_row[col..=n]) {
                let delta = &factor * pivot_entry;
                *entry -= delta;
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }

    // A zero row with nonzero rhs means the system is inconsistent.
    for row in aug.iter().skip(rank) {
        if !row[n].is_zero() {
            return Err(RationalError::NoSolution);
        }
    }
    if rank < n {
        return Err(RationalError::NonUniqueSolution);
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[i][n].clone();
    }

    // Residual re-check of every original equation.
    let ax = a.mul_vector(&x)?;
    if ax.iter().zip(b).any(|(lhs, rhs)| lhs != rhs) {
        return Err(RationalError::NoSolution);
    }
    Ok(x)
}

/// uᵀ·M·v, exactly.
pub fn bilinear_form(
    u: &[Rational],
    m: &RationalMatrix,
    v: &[Rational],
) -> Result<Rational, RationalError> {
    if u.len() != m.rows() || v.len() != m.cols() {
        return Err(RationalError::DimensionMismatch(format!(
            "form is {}x{}, vectors are {} and {}",
            m.rows(),
            m.cols(),
            u.len(),
            v.len()
        )));
    }
    let mv = m.mul_vector(v)?;
    Ok(u.iter()
        .zip(&mv)
        .map(|(a, b)| a * b)
        .fold(Rational::zero(), |acc, t| acc + t))
}

/// Floor square root of a non-negative integer, plus an exactness flag.
pub fn integer_sqrt(n: &BigInt) -> Result<(BigInt, bool), RationalError> {
    if n.sign() == Sign::Minus {
        return Err(RationalError::NegativeInput);
    }
    let root = num_integer::Roots::sqrt(n);
    let exact = &root * &root == *n;
    Ok((root, exact))
}
