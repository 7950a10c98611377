//! Fredholm integro-differential problem
//! `y' - y - ∫_0^1 e^{sx} y(s) ds = (1 - e^{x+1})/(x+1)`, `y(0) = 1`, on `[0, 1]`.
//!
//! Integrating once gives
//! `y(x) - ∫_0^x y - ∫_0^x ∫_0^1 e^{st} y(s) ds dt - ∫_0^x r = 1`,
//! discretized with the square GIM, the endpoint row for the inner integral
//! and the optimal GIM for the known source term `r`.

use nalgebra::DMatrix;

use super::linalg::{condition_number_2, lu_solve};
use super::CollocationSolution;
use crate::barycentric::bary_weights_gg;
use crate::error::Result;
use crate::gauss;
use crate::gim::{self, row_endpoint_from_basis};
use crate::optimal::{build_optimal_gim, build_optimal_gim_symmetric, OptimalConfig};
use crate::poly::GegenbauerParam;

fn source(x: f64) -> f64 {
    (1.0 - (x + 1.0).exp()) / (x + 1.0)
}

/// Assembled linear system `A w = b` on the shifted GG nodes.
#[derive(Debug, Clone)]
pub struct Example1System {
    pub nodes: Vec<f64>,
    pub matrix: DMatrix<f64>,
    pub rhs: Vec<f64>,
}

impl Example1System {
    /// `m = config.m` sets the degree of the optimal quadrature for `r`.
    pub fn assemble(n: usize, param: GegenbauerParam, config: &OptimalConfig) -> Result<Self> {
        let rule = gauss::gg_rule(n, param)?;
        let p = gim::build_gim_gg(n, param)?.to_unit_interval();
        let end: Vec<f64> = row_endpoint_from_basis(&bary_weights_gg(&rule))
            .iter()
            .map(|e| e / 2.0)
            .collect();
        let optimal = if config.m % 2 == 0 {
            build_optimal_gim_symmetric(rule.nodes(), config)?
        } else {
            build_optimal_gim(rule.nodes(), config)?
        }
        .to_unit_interval();

        let y = p.target_nodes().to_vec();
        let n1 = y.len();
        // kernel[k][i] = e_i · exp(y_k y_i)
        let kernel: Vec<Vec<f64>> = y
            .iter()
            .map(|&yk| y.iter().zip(&end).map(|(&yi, e)| e * (yk * yi).exp()).collect())
            .collect();
        let matrix = DMatrix::from_fn(n1, n1, |j, i| {
            let nonlocal: f64 = (0..n1).map(|k| p.get(j, k) * kernel[k][i]).sum();
            let delta = if i == j { 1.0 } else { 0.0 };
            delta - p.get(j, i) - nonlocal
        });
        let rhs = (0..n1).map(|j| 1.0 + optimal.integrate_row(j, source)).collect();
        Ok(Self { nodes: y, matrix, rhs })
    }
}

/// Solves the problem by dense LU; reports the error against `e^x` and `κ2`.
pub fn solve_example1(n: usize, param: GegenbauerParam, config: &OptimalConfig) -> Result<CollocationSolution> {
    let system = Example1System::assemble(n, param, config)?;
    let w = lu_solve(&system.matrix, &system.rhs)?;
    let kappa = condition_number_2(&system.matrix)?;
    Ok(CollocationSolution::new(
        n,
        Some(config.m),
        param.value(),
        system.nodes,
        w,
        f64::exp,
        Some(kappa.value),
    ))
}
