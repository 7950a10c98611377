//! Barycentric Lagrange interpolation.

use crate::error::{Error, Result};
use crate::gauss::{QuadratureRule, RuleKind};

/// Default distance below which an evaluation point counts as a node hit.
pub const EXACT_HIT_TOL: f64 = f64::EPSILON;

/// Interpolation nodes and their barycentric weights `ξ`.
///
/// Only ratios of weights matter: scaling every `ξ` by one nonzero constant
/// leaves the interpolant unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricBasis {
    nodes: Vec<f64>,
    xi: Vec<f64>,
}

impl BarycentricBasis {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.xi
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Same nodes with every weight multiplied by `factor`.
    pub fn rescaled(&self, factor: f64) -> Self {
        Self {
            nodes: self.nodes.clone(),
            xi: self.xi.iter().map(|w| w * factor).collect(),
        }
    }

    /// Interpolant value at `x` using the default hit tolerance.
    pub fn eval(&self, values: &[f64], x: f64) -> Result<f64> {
        self.eval_with_tol(values, x, EXACT_HIT_TOL)
    }

    /// Interpolant value at `x`; if `|x - x_i| <= tol` the sample `values[i]`
    /// is returned directly.
    pub fn eval_with_tol(&self, values: &[f64], x: f64, tol: f64) -> Result<f64> {
        if values.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: values.len(),
            });
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&xi_node, &w), &f) in self.nodes.iter().zip(&self.xi).zip(values) {
            let d = x - xi_node;
            if d.abs() <= tol {
                return Ok(f);
            }
            let mu = w / d;
            num += mu * f;
            den += mu;
        }
        Ok(num / den)
    }

    /// Writes the Lagrange basis values `L_i(x)` into `out`.
    ///
    /// When `x` lies within `tol` of node `i` the cardinal vector `e_i` is
    /// written instead and `Some(i)` is returned.
    pub fn cardinals_into(&self, x: f64, tol: f64, out: &mut [f64]) -> Option<usize> {
        debug_assert_eq!(out.len(), self.len());
        if let Some(hit) = self.nodes.iter().position(|&n| (x - n).abs() <= tol) {
            out.iter_mut().for_each(|o| *o = 0.0);
            out[hit] = 1.0;
            return Some(hit);
        }
        let mut den = 0.0;
        for ((o, &n), &w) in out.iter_mut().zip(&self.nodes).zip(&self.xi) {
            *o = w / (x - n);
            den += *o;
        }
        out.iter_mut().for_each(|o| *o /= den);
        None
    }

    pub fn cardinals(&self, x: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.len()];
        self.cardinals_into(x, EXACT_HIT_TOL, &mut out);
        out
    }
}

/// `ξ_j = 1 / Π_{i≠j} (x_j - x_i)` for pairwise distinct nodes.
pub fn bary_weights_direct(nodes: &[f64]) -> Result<BarycentricBasis> {
    if nodes.is_empty() {
        return Err(Error::InvalidInput("no interpolation nodes".into()));
    }
    let mut xi = Vec::with_capacity(nodes.len());
    for (j, &xj) in nodes.iter().enumerate() {
        let mut prod = 1.0;
        for (i, &x) in nodes.iter().enumerate() {
            if i != j {
                let d = xj - x;
                if d == 0.0 {
                    return Err(Error::DuplicateNodes(i.min(j), i.max(j)));
                }
                prod *= d;
            }
        }
        xi.push(1.0 / prod);
    }
    Ok(BarycentricBasis {
        nodes: nodes.to_vec(),
        xi,
    })
}

/// Weights for Gauss nodes without node differences:
/// `ξ_i = (-1)^i sin(arccos x_i) √ϖ_i`.
pub fn bary_weights_gg(rule: &QuadratureRule) -> BarycentricBasis {
    let xi = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .enumerate()
        .map(|(i, (&x, &w))| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * x.acos().sin() * w.sqrt()
        })
        .collect();
    BarycentricBasis {
        nodes: rule.nodes().to_vec(),
        xi,
    }
}

/// `(-1)^i √((1 - x_i²) ϖ_i)`, the same weights before the angle substitution.
pub fn bary_weights_gg_algebraic(rule: &QuadratureRule) -> BarycentricBasis {
    debug_assert!(matches!(rule.kind(), RuleKind::Gegenbauer(_) | RuleKind::Legendre));
    let xi = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .enumerate()
        .map(|(i, (&x, &w))| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * ((1.0 - x * x) * w).sqrt()
        })
        .collect();
    BarycentricBasis {
        nodes: rule.nodes().to_vec(),
        xi,
    }
}
