//! Damped Newton iteration with a forward-difference Jacobian.

use nalgebra::DMatrix;

use super::linalg::lu_solve;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonOptions {
    /// Stop once `‖F(x)‖∞ <= tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Step halvings allowed when the residual norm does not decrease.
    pub max_halvings: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100,
            max_halvings: 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonOutcome {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub residual_norm: f64,
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Forward differences with step `√ε · max(1, |x_i|)`.
pub fn fd_jacobian(residual: &impl Fn(&[f64]) -> Vec<f64>, x: &[f64], fx: &[f64]) -> DMatrix<f64> {
    let n = x.len();
    let mut jac = DMatrix::zeros(fx.len(), n);
    let mut xp = x.to_vec();
    for i in 0..n {
        let h = f64::EPSILON.sqrt() * x[i].abs().max(1.0);
        xp[i] = x[i] + h;
        let step = xp[i] - x[i];
        let fp = residual(&xp);
        for (r, (a, b)) in fp.iter().zip(fx).enumerate() {
            jac[(r, i)] = (a - b) / step;
        }
        xp[i] = x[i];
    }
    jac
}

/// Solves `F(x) = 0` from `x0`.
pub fn newton_solve(
    residual: impl Fn(&[f64]) -> Vec<f64>,
    x0: &[f64],
    options: NewtonOptions,
) -> Result<NewtonOutcome> {
    if x0.is_empty() {
        return Err(Error::InvalidInput("Newton iteration needs at least one unknown".into()));
    }
    let mut x = x0.to_vec();
    let mut fx = residual(&x);
    if fx.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            got: fx.len(),
        });
    }
    let mut norm = inf_norm(&fx);
    for iter in 0..options.max_iter {
        if norm <= options.tol {
            return Ok(NewtonOutcome { x, iterations: iter, residual_norm: norm });
        }
        let jac = fd_jacobian(&residual, &x, &fx);
        let rhs: Vec<f64> = fx.iter().map(|v| -v).collect();
        let delta = lu_solve(&jac, &rhs)?;

        let mut lambda = 1.0;
        let mut trial: Vec<f64>;
        let mut f_trial: Vec<f64>;
        let mut halvings = 0;
        loop {
            trial = x.iter().zip(&delta).map(|(a, d)| a + lambda * d).collect();
            f_trial = residual(&trial);
            let n_trial = inf_norm(&f_trial);
            if (n_trial < norm && n_trial.is_finite()) || halvings == options.max_halvings {
                break;
            }
            lambda *= 0.5;
            halvings += 1;
        }
        x = trial;
        fx = f_trial;
        norm = inf_norm(&fx);
    }
    if norm <= options.tol {
        Ok(NewtonOutcome { x, iterations: options.max_iter, residual_norm: norm })
    } else {
        Err(Error::NewtonDivergence {
            iterations: options.max_iter,
            residual: norm,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_residual_takes_one_step() {
        let out = newton_solve(|x| vec![x[0] - 3.5, x[1] + 1.0], &[0.0, 0.0], NewtonOptions::default()).unwrap();
        assert!((out.x[0] - 3.5).abs() < 1e-12 && (out.x[1] + 1.0).abs() < 1e-12);
        assert!(out.iterations <= 2);
    }

    #[test]
    fn scalar_square_root() {
        let out = newton_solve(|x| vec![x[0] * x[0] - 4.0], &[3.0], NewtonOptions::default()).unwrap();
        assert!((out.x[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn failures() {
        assert!(newton_solve(|_| vec![], &[], NewtonOptions::default()).is_err());
        let opts = NewtonOptions { max_iter: 5, ..Default::default() };
        assert!(matches!(
            newton_solve(|x| vec![x[0] * x[0] + 1.0], &[0.5], opts),
            Err(Error::NewtonDivergence { .. }) | Err(Error::SingularSystem)
        ));
        assert!(newton_solve(|x| vec![x[0], 0.0], &[1.0], NewtonOptions::default()).is_err());
    }
}
