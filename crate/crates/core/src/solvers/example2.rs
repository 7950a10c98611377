//! Nonlocal boundary-value problem
//! `-c α(∫_0^1 u) u'' + u^5 = 0`, `u(0) = 1`, `u(1) = √2/2`, on `[0, 1]`,
//! with `α(q) = 1/q` and exact solution `u = 1/√(1 + x)`.

use super::newton::{newton_solve, NewtonOptions};
use super::CollocationSolution;
use crate::barycentric::bary_weights_gg;
use crate::error::Result;
use crate::gauss;
use crate::gim::{self, IntegrationMatrix};
use crate::poly::GegenbauerParam;

/// Residual
/// `P2 U⁵ - (p2_end · U⁵) X + [4(4 - 3√2) X - 8(√2 - 1)(U - 1)] ⊘ (3 p1_end · U)`
/// with all operators mapped to `[0, 1]`.
#[derive(Debug, Clone)]
pub struct Example2System {
    second: IntegrationMatrix,
    end1: Vec<f64>,
    end2: Vec<f64>,
}

impl Example2System {
    pub fn assemble(n: usize, param: GegenbauerParam) -> Result<Self> {
        let rule = gauss::gg_rule(n, param)?;
        let first = gim::build_gim_gg(n, param)?.to_unit_interval();
        let second = first.qth_order(2)?;
        let end1: Vec<f64> = gim::row_endpoint_from_basis(&bary_weights_gg(&rule))
            .iter()
            .map(|e| e / 2.0)
            .collect();
        let end2 = first
            .source_nodes()
            .iter()
            .zip(&end1)
            .map(|(y, e)| (1.0 - y) * e)
            .collect();
        Ok(Self { second, end1, end2 })
    }

    /// Shifted GG nodes on `[0, 1]`.
    pub fn nodes(&self) -> &[f64] {
        self.second.target_nodes()
    }

    pub fn residual(&self, u: &[f64]) -> Vec<f64> {
        let sqrt2 = std::f64::consts::SQRT_2;
        let u5: Vec<f64> = u.iter().map(|v| v.powi(5)).collect();
        let p2u5 = self.second.apply(&u5).expect("U has one entry per node");
        let end2_u5: f64 = self.end2.iter().zip(&u5).map(|(a, b)| a * b).sum();
        let mean: f64 = self.end1.iter().zip(u).map(|(a, b)| a * b).sum();
        self.nodes()
            .iter()
            .enumerate()
            .map(|(j, &x)| {
                let bracket = 4.0 * (4.0 - 3.0 * sqrt2) * x - 8.0 * (sqrt2 - 1.0) * (u[j] - 1.0);
                p2u5[j] - end2_u5 * x + bracket / (3.0 * mean)
            })
            .collect()
    }
}

pub fn exact_solution(x: f64) -> f64 {
    1.0 / (1.0 + x).sqrt()
}

/// Solves the residual system by damped Newton from `U ≡ 1`.
pub fn solve_example2(n: usize, param: GegenbauerParam) -> Result<CollocationSolution> {
    let system = Example2System::assemble(n, param)?;
    let n1 = system.nodes().len();
    let out = newton_solve(|u| system.residual(u), &vec![1.0; n1], NewtonOptions::default())?;
    Ok(CollocationSolution::new(
        n,
        None,
        param.value(),
        system.nodes().to_vec(),
        out.x,
        exact_solution,
        None,
    ))
}
