//! Per-node quadrature errors of the barycentric and basis GIMs.

use crate::csv;
use crate::error::{Error, Result};
use crate::gim::{build_basis_gim, build_gim_gg, IntegrationMatrix};
use crate::poly::GegenbauerParam;
use crate::reference::TestFunction;

#[derive(Debug, Clone)]
pub struct BenchmarkSpec {
    pub integrand: TestFunction,
    pub n_grid: Vec<usize>,
    pub alpha_grid: Vec<f64>,
}

/// Absolute errors at node `node_index` of rule `(n, α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub alpha: f64,
    pub node_index: usize,
    /// `NaN` when the barycentric matrix is infeasible.
    pub err_bary: f64,
    pub err_basis: f64,
}

fn errors(m: &IntegrationMatrix, f: &TestFunction, reference: &[f64]) -> Vec<f64> {
    m.integrate(|x| f.eval(x))
        .iter()
        .zip(reference)
        .map(|(q, r)| (q - r).abs())
        .collect()
}

pub fn run_benchmark(spec: &BenchmarkSpec) -> Result<Vec<BenchRow>> {
    if spec.n_grid.is_empty() || spec.alpha_grid.is_empty() {
        return Err(Error::InvalidInput("benchmark grids must be non-empty".into()));
    }
    let mut rows = Vec::new();
    for &n in &spec.n_grid {
        for &alpha in &spec.alpha_grid {
            let param = GegenbauerParam::new(alpha)?;
            let basis = build_basis_gim(n, param)?;
            let reference: Vec<f64> = basis
                .target_nodes()
                .iter()
                .map(|&x| spec.integrand.reference_integral(x))
                .collect();
            let err_basis = errors(&basis, &spec.integrand, &reference);
            let err_bary = match build_gim_gg(n, param) {
                Ok(m) => errors(&m, &spec.integrand, &reference),
                Err(Error::Infeasible(_)) => vec![f64::NAN; n + 1],
                Err(e) => return Err(e),
            };
            for (node_index, (&eb, &es)) in err_bary.iter().zip(&err_basis).enumerate() {
                rows.push(BenchRow { n, alpha, node_index, err_bary: eb, err_basis: es });
            }
        }
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,alpha,node_index,err_bary,err_basis\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            csv::fmt(r.alpha),
            r.node_index,
            csv::fmt(r.err_bary),
            csv::fmt(r.err_basis)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_twenty_is_integrated_at_n_twenty() {
        let spec = BenchmarkSpec { integrand: TestFunction::F1, n_grid: vec![20], alpha_grid: vec![0.5] };
        let rows = run_benchmark(&spec).unwrap();
        assert_eq!(rows.len(), 21);
        assert!(rows.iter().all(|r| r.err_bary <= 1e-10 && r.err_basis <= 1e-10));
    }

    #[test]
    fn infeasible_points_are_nan_rows() {
        let spec = BenchmarkSpec { integrand: TestFunction::F2, n_grid: vec![4], alpha_grid: vec![1.0] };
        let rows = run_benchmark(&spec).unwrap();
        assert!(rows.iter().all(|r| r.err_bary.is_nan() && r.err_basis.is_finite()));
        let csv = rows_to_csv(&rows);
        assert!(csv.starts_with("n,alpha,node_index,err_bary,err_basis\n4,1.0000000000000000e0,0,NaN,"));
    }

    #[test]
    fn empty_grid_is_rejected() {
        let spec = BenchmarkSpec { integrand: TestFunction::F2, n_grid: vec![], alpha_grid: vec![0.5] };
        assert!(run_benchmark(&spec).is_err());
    }
}
