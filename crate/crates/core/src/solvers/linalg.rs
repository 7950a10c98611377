//! Dense linear algebra wrappers.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// 2-norm condition number `σ_max / σ_min`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionNumber {
    /// `+inf` when the matrix is singular.
    pub value: f64,
    pub singular: bool,
}

pub fn condition_number_2(matrix: &DMatrix<f64>) -> Result<ConditionNumber> {
    if !matrix.is_square() || matrix.is_empty() {
        return Err(Error::InvalidInput(format!(
            "condition number needs a non-empty square matrix, got {}x{}",
            matrix.nrows(),
            matrix.ncols()
        )));
    }
    let sv = matrix.singular_values();
    let max = sv.max();
    let min = sv.min();
    let value = max / min;
    if min == 0.0 || !value.is_finite() {
        Ok(ConditionNumber { value: f64::INFINITY, singular: true })
    } else {
        Ok(ConditionNumber { value, singular: false })
    }
}

/// Solves `A x = b` by LU with partial pivoting.
pub fn lu_solve(a: &DMatrix<f64>, b: &[f64]) -> Result<Vec<f64>> {
    if !a.is_square() || a.nrows() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.nrows(),
            got: b.len(),
        });
    }
    let x = a
        .clone()
        .lu()
        .solve(&DVector::from_column_slice(b))
        .ok_or(Error::SingularSystem)?;
    if x.iter().all(|v| v.is_finite()) {
        Ok(x.iter().copied().collect())
    } else {
        Err(Error::SingularSystem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn condition_examples() {
        let c = condition_number_2(&DMatrix::identity(4, 4)).unwrap();
        assert_relative_eq!(c.value, 1.0, epsilon = 1e-15);
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![10.0, 1.0]));
        assert_relative_eq!(condition_number_2(&d).unwrap().value, 10.0, epsilon = 1e-14);
        let s = condition_number_2(&DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0])).unwrap();
        assert!(s.singular || s.value > 1e15);
        assert!(condition_number_2(&DMatrix::zeros(2, 3)).is_err());
        assert!(condition_number_2(&DMatrix::zeros(2, 2)).unwrap().singular);
    }

    #[test]
    fn lu_examples() {
        let a = DMatrix::from_row_slice(2, 2, &[4.0, 1.0, 2.0, 3.0]);
        let x = lu_solve(&a, &[9.0, 13.0]).unwrap();
        assert_relative_eq!(x[0], 1.4, epsilon = 1e-15);
        assert_relative_eq!(x[1], 3.4, epsilon = 1e-15);
        assert!(matches!(lu_solve(&DMatrix::zeros(2, 2), &[1.0, 1.0]), Err(Error::SingularSystem)));
        assert!(lu_solve(&a, &[1.0]).is_err());
    }
}
