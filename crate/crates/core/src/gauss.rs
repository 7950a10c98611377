//! Gegenbauer–Gauss and Legendre–Gauss quadrature rules.
//!
//! Nodes come from the eigenvalues of the symmetric Jacobi matrix of the
//! orthonormalized Gegenbauer recurrence (Golub–Welsch), each polished by
//! Newton's method on `G_{n+1}`. Christoffel numbers are evaluated at the
//! polished nodes as `1 / Σ_k G_k(x)² / λ_k`, the closed form of the squared
//! first eigenvector components scaled by the total mass.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::csv;
use crate::error::{Error, Result};
use crate::poly::{self, GegenbauerParam};

const NEWTON_MAX_ITER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleKind {
    /// Gegenbauer–Gauss rule for the weight `(1 - x²)^(α - 1/2)`.
    Gegenbauer(GegenbauerParam),
    /// Legendre–Gauss rule, weight 1.
    Legendre,
}

impl RuleKind {
    pub fn param(self) -> GegenbauerParam {
        match self {
            RuleKind::Gegenbauer(p) => p,
            RuleKind::Legendre => GegenbauerParam::legendre(),
        }
    }

    fn tag(self) -> &'static str {
        match self {
            RuleKind::Gegenbauer(_) => "GG",
            RuleKind::Legendre => "LG",
        }
    }
}

/// Nodes ascending in `(-1, 1)` with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of nodes, `n + 1`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Polynomial degree `n` of the rule (one less than the node count).
    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    /// `Σ ϖ_i f(x_i)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Serializes as `kind,n,alpha` followed by `node,weight` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,n,alpha\n");
        out.push_str(&format!(
            "{},{},{}\nnode,weight\n",
            self.kind.tag(),
            self.degree(),
            csv::fmt(self.kind.param().value())
        ));
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            out.push_str(&format!("{},{}\n", csv::fmt(*x), csv::fmt(*w)));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        csv::expect_header(lines.next(), "kind,n,alpha")?;
        let meta = csv::fields(lines.next(), 3)?;
        let n = csv::parse_usize(meta[1])?;
        let alpha = csv::parse_f64(meta[2])?;
        let kind = match meta[0].trim() {
            "GG" => RuleKind::Gegenbauer(GegenbauerParam::new(alpha)?),
            "LG" => RuleKind::Legendre,
            other => return Err(Error::InvalidInput(format!("unknown rule kind {other:?}"))),
        };
        csv::expect_header(lines.next(), "node,weight")?;
        let mut nodes = Vec::with_capacity(n + 1);
        let mut weights = Vec::with_capacity(n + 1);
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let f = csv::fields(Some(line), 2)?;
            nodes.push(csv::parse_f64(f[0])?);
            weights.push(csv::parse_f64(f[1])?);
        }
        if nodes.len() != n + 1 {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                got: nodes.len(),
            });
        }
        Ok(Self { kind, nodes, weights })
    }
}

impl fmt::Display for QuadratureRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} rule, {} nodes, alpha = {}",
            self.kind.tag(),
            self.len(),
            self.kind.param().value()
        )
    }
}

/// Squared off-diagonal entries of the orthonormal Jacobi matrix.
fn jacobi_offdiag_sq(k: usize, a: f64) -> f64 {
    let kf = k as f64;
    if k == 1 {
        1.0 / (2.0 * (1.0 + a))
    } else {
        kf * (kf + 2.0 * a - 1.0) / (4.0 * (kf + a) * (kf + a - 1.0))
    }
}

fn polish(x0: f64, degree: usize, param: GegenbauerParam) -> Result<f64> {
    let mut x = x0;
    for _ in 0..NEWTON_MAX_ITER {
        let (p, dp) = poly::value_and_derivative(degree, param, x);
        let step = p / dp;
        if !step.is_finite() {
            return Err(Error::RuleConvergence(degree));
        }
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON {
            break;
        }
    }
    Ok(x)
}

/// The `n + 1` zeros of `G_{n+1}^(α)` with their Christoffel numbers.
pub fn gg_rule(n: usize, param: GegenbauerParam) -> Result<QuadratureRule> {
    let count = n + 1;
    let a = param.value();
    let kind = RuleKind::Gegenbauer(param);
    if n == 0 {
        return Ok(QuadratureRule {
            kind,
            nodes: vec![0.0],
            weights: vec![poly::total_mass(param)],
        });
    }

    let jacobi = DMatrix::from_fn(count, count, |i, j| {
        if i.abs_diff(j) == 1 {
            jacobi_offdiag_sq(i.max(j), a).sqrt()
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::try_new(jacobi, f64::EPSILON, 0).ok_or(Error::RuleConvergence(count))?;
    let mut guess: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    guess.sort_by(f64::total_cmp);

    // Polish the non-negative half and mirror it; the weight is even.
    let mut nodes = vec![0.0; count];
    for i in count / 2..count {
        let x = if 2 * i + 1 == count { 0.0 } else { polish(guess[i], count, param)? };
        nodes[count - 1 - i] = -x;
        nodes[i] = x;
    }

    let lambda = poly::norms(n, param);
    let weight_at = |x: f64| {
        let s: f64 = poly::values_upto(n, param, x)
            .iter()
            .zip(&lambda)
            .map(|(g, l)| g * g / l)
            .sum();
        1.0 / s
    };
    let mut weights = vec![0.0; count];
    for i in count / 2..count {
        let w = weight_at(nodes[i]);
        weights[i] = w;
        weights[count - 1 - i] = w;
    }

    let ordered = nodes.windows(2).all(|w| w[0] < w[1]);
    let inside = nodes[0] > -1.0 && nodes[count - 1] < 1.0;
    let positive = weights.iter().all(|w| w.is_finite() && *w > 0.0);
    if !(ordered && inside && positive) {
        return Err(Error::RuleConvergence(count));
    }
    Ok(QuadratureRule { kind, nodes, weights })
}

/// Legendre–Gauss rule with `big_n + 1` points.
pub fn lg_rule(big_n: usize) -> Result<QuadratureRule> {
    let mut rule = gg_rule(big_n, GegenbauerParam::legendre())?;
    rule.kind = RuleKind::Legendre;
    Ok(rule)
}

thread_local! {
    static LG_CACHE: RefCell<HashMap<usize, Rc<QuadratureRule>>> = RefCell::new(HashMap::new());
}

/// Memoized [`lg_rule`]; the cache is per thread.
pub(crate) fn lg_rule_cached(big_n: usize) -> Rc<QuadratureRule> {
    LG_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry(big_n)
            .or_insert_with(|| Rc::new(lg_rule(big_n).expect("Legendre-Gauss rule")))
            .clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(a: f64) -> GegenbauerParam {
        GegenbauerParam::new(a).unwrap()
    }

    #[test]
    fn odd_count_has_exact_zero_middle_node() {
        for &a in &[-0.4, 0.0, 0.5, 1.0, 2.0] {
            assert_eq!(gg_rule(2, p(a)).unwrap().nodes()[1], 0.0);
        }
    }

    #[test]
    fn two_point_legendre() {
        let r = gg_rule(1, p(0.5)).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert_relative_eq!(r.nodes()[0], -s, epsilon = 1e-15);
        assert_relative_eq!(r.nodes()[1], s, epsilon = 1e-15);
        assert_relative_eq!(r.weights()[0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(r.weights()[1], 1.0, epsilon = 1e-14);
        assert_relative_eq!(gg_rule(4, p(0.5)).unwrap().weights().iter().sum::<f64>(), 2.0, epsilon = 1e-14);
    }

    #[test]
    fn small_legendre_rules() {
        let r = lg_rule(0).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert_relative_eq!(r.weights()[0], 2.0, epsilon = 1e-15);

        let r = lg_rule(2).unwrap();
        let s = (0.6f64).sqrt();
        assert_relative_eq!(r.nodes()[0], -s, epsilon = 1e-15);
        assert_eq!(r.nodes()[1], 0.0);
        assert_relative_eq!(r.nodes()[2], s, epsilon = 1e-15);
        for (w, e) in r.weights().iter().zip([5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0]) {
            assert_relative_eq!(*w, e, epsilon = 1e-14);
        }
        assert_eq!(r.kind(), RuleKind::Legendre);
    }

    #[test]
    fn chebyshev_nodes_are_cosines() {
        let n = 12;
        let r = gg_rule(n, p(0.0)).unwrap();
        for (i, x) in r.nodes().iter().enumerate() {
            let theta = (2 * (n - i) + 1) as f64 * std::f64::consts::PI / (2 * (n + 1)) as f64;
            assert_relative_eq!(*x, theta.cos(), epsilon = 2e-15);
        }
        for w in r.weights() {
            assert_relative_eq!(*w, std::f64::consts::PI / (n + 1) as f64, max_relative = 1e-13);
        }
    }

    #[test]
    fn second_kind_chebyshev_nodes() {
        // α = 1: zeros of U_{n+1} are cos(kπ/(n+2)).
        let n = 4;
        let r = gg_rule(n, p(1.0)).unwrap();
        for (i, x) in r.nodes().iter().enumerate() {
            let k = (n + 1 - i) as f64;
            assert!((x - (k * std::f64::consts::PI / (n + 2) as f64).cos()).abs() <= 2.0 * f64::EPSILON);
        }
    }

    #[test]
    fn csv_round_trip() {
        let r = gg_rule(6, p(-0.25)).unwrap();
        let text = r.to_csv();
        assert!(text.starts_with("kind,n,alpha\nGG,6,"));
        assert_eq!(QuadratureRule::from_csv(&text).unwrap(), r);
        let lg = lg_rule(3).unwrap();
        assert_eq!(QuadratureRule::from_csv(&lg.to_csv()).unwrap(), lg);
    }

    #[test]
    fn csv_rejects_truncated_input() {
        let text = gg_rule(3, p(0.3)).unwrap().to_csv();
        let cut: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
        assert!(QuadratureRule::from_csv(&cut).is_err());
        assert!(QuadratureRule::from_csv("node,weight\n").is_err());
    }
}
