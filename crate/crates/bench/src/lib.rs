//! Shared fixtures for the criterion benchmarks.

use mordell_core::{FibreData, RationalMatrix, SexticCurve};

/// The nine-component fibre at p = 2 of y² = x⁶ + x⁴ + x² + 1.
pub fn nine_component_fibre() -> FibreData {
    FibreData::new(
        2,
        &[1, 1, 1, 1, 1, 1, 2, 2, 2],
        &[0; 9],
        RationalMatrix::from_i64_rows(&[
            vec![-2, 0, 0, 0, 0, 0, 1, 0, 0],
            vec![0, -2, 0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, -2, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, -2, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, -2, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, -2, 0, 1, 0],
            vec![1, 1, 1, 1, 0, 0, -3, 0, 1],
            vec![0, 0, 0, 0, 1, 1, 0, -2, 1],
            vec![0, 0, 0, 0, 0, 0, 1, 1, -2],
        ])
        .expect("square matrix"),
    )
}

pub fn example_curve() -> SexticCurve {
    SexticCurve::from_i64([1, 0, 1, 0, 1, 0, 1]).expect("squarefree sextic")
}
