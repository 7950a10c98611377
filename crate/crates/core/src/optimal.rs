//! Optimal barycentric GIMs.
//!
//! Row `k` integrates over `[-1, x_k]` the interpolant through the GG nodes of
//! its own parameter `α*_k`, chosen to minimize
//! `η² = (2^m / K_{m+1} · ∫_{-1}^{x_k} G_{m+1}^(α))²`. For large `m` a fixed
//! Chebyshev or Legendre parameter is used instead.

use std::fmt;

use crate::barycentric::{bary_weights_gg, BarycentricBasis};
use crate::csv;
use crate::error::{Collision, Error, Result};
use crate::gauss::{self, QuadratureRule};
use crate::gim::{self, FeasibilityReport, Interval, MatrixCsv};
use crate::poly::{self, GegenbauerParam};

const GRID_SAMPLES: usize = 64;
const GOLDEN_TOL: f64 = 1e-6;

/// Fixed parameter used when `m > m_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FallbackAlpha {
    /// `α = 0`
    #[default]
    Chebyshev,
    /// `α = 0.5`
    Legendre,
}

impl FallbackAlpha {
    pub fn value(self) -> f64 {
        match self {
            FallbackAlpha::Chebyshev => 0.0,
            FallbackAlpha::Legendre => 0.5,
        }
    }

    pub fn param(self) -> GegenbauerParam {
        match self {
            FallbackAlpha::Chebyshev => GegenbauerParam::chebyshev(),
            FallbackAlpha::Legendre => GegenbauerParam::legendre(),
        }
    }
}

/// Replacement for minimizers in `(-1/2, -1/2 + ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NearBoundary {
    /// `-1/2 + ε`
    ShiftedBoundary,
    /// The fallback parameter.
    #[default]
    Fallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalConfig {
    /// Degree of the per-row interpolant; each row has `m + 1` columns.
    pub m: usize,
    pub m_max: usize,
    /// Upper end of the parameter search, in `[1, 2]`.
    pub r: f64,
    pub epsilon: f64,
    pub alpha_a: FallbackAlpha,
    pub alpha_b: NearBoundary,
}

impl OptimalConfig {
    pub fn new(m: usize) -> Self {
        Self {
            m,
            m_max: 20,
            r: 2.0,
            epsilon: f64::EPSILON,
            alpha_a: FallbackAlpha::Chebyshev,
            alpha_b: NearBoundary::Fallback,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1.0..=2.0).contains(&self.r) {
            return Err(Error::InvalidInput(format!("r must lie in [1, 2], got {}", self.r)));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 0.5) {
            return Err(Error::InvalidInput(format!(
                "epsilon must lie in (0, 1/2), got {}",
                self.epsilon
            )));
        }
        Ok(())
    }

    fn alpha_b_value(&self) -> f64 {
        match self.alpha_b {
            NearBoundary::ShiftedBoundary => -0.5 + self.epsilon,
            NearBoundary::Fallback => self.alpha_a.value(),
        }
    }
}

/// Adjoint GG rule of one row together with its barycentric weights.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjointRule {
    pub rule: QuadratureRule,
    pub basis: BarycentricBasis,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimalIntegrationMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
    order: u32,
    interval: Interval,
    target_nodes: Vec<f64>,
    /// Row sample points in the matrix's own coordinates.
    sample_nodes: Vec<Vec<f64>>,
    alpha_star: Vec<f64>,
    adjoint: Vec<AdjointRule>,
}

impl OptimalIntegrationMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn target_nodes(&self) -> &[f64] {
        &self.target_nodes
    }

    pub fn alpha_star(&self) -> &[f64] {
        &self.alpha_star
    }

    /// Adjoint rules on `[-1, 1]`.
    pub fn adjoint_rules(&self) -> &[AdjointRule] {
        &self.adjoint
    }

    /// Points at which row `k` samples the integrand.
    pub fn sample_nodes(&self, row: usize) -> &[f64] {
        &self.sample_nodes[row]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Row `k` applied to samples of `f` at its adjoint nodes.
    pub fn integrate_row(&self, row: usize, f: impl Fn(f64) -> f64) -> f64 {
        self.row(row)
            .iter()
            .zip(&self.sample_nodes[row])
            .map(|(p, &z)| p * f(z))
            .sum()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.rows).map(|k| self.integrate_row(k, &f)).collect()
    }

    /// `p^(q)_{j,i} = (x_j - z_{j,i})^(q-1) / (q-1)! · p^(1)_{j,i}`.
    pub fn qth_order(&self, q: u32) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidInput("integration order q must be >= 1".into()));
        }
        if self.order != 1 {
            return Err(Error::InvalidInput(format!(
                "q-th order matrices are built from a first-order matrix, got order {}",
                self.order
            )));
        }
        let fact: f64 = (1..q).map(f64::from).product();
        let mut out = self.clone();
        out.order = q;
        for (j, &xj) in self.target_nodes.iter().enumerate() {
            for (i, &z) in self.sample_nodes[j].iter().enumerate() {
                out.entries[j * self.cols + i] *= (xj - z).powi(q as i32 - 1) / fact;
            }
        }
        Ok(out)
    }

    /// The same operator on `[0, 1]`: all nodes mapped by `y = (x + 1)/2`,
    /// entries divided by `2^q`.
    pub fn to_unit_interval(&self) -> Self {
        if self.interval == Interval::Unit {
            return self.clone();
        }
        let scale = 0.5f64.powi(self.order as i32);
        let map = |v: &[f64]| v.iter().map(|x| 0.5 * (x + 1.0)).collect::<Vec<_>>();
        Self {
            entries: self.entries.iter().map(|p| p * scale).collect(),
            target_nodes: map(&self.target_nodes),
            sample_nodes: self.sample_nodes.iter().map(|z| map(z)).collect(),
            interval: Interval::Unit,
            ..self.clone()
        }
    }

    /// Matrix block (with `alpha = NaN`, since the parameter varies by row)
    /// followed by a `k,alphaStar` table.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rows,cols,q,alpha,interval\n");
        out.push_str(&format!(
            "{},{},{},NaN,{}\n",
            self.rows,
            self.cols,
            self.order,
            self.interval.tag()
        ));
        for j in 0..self.rows {
            out.push_str(&csv::join(self.row(j).iter().copied()));
            out.push('\n');
        }
        out.push_str("k,alphaStar\n");
        for (k, a) in self.alpha_star.iter().enumerate() {
            out.push_str(&format!("{k},{}\n", csv::fmt(*a)));
        }
        out
    }
}

impl fmt::Display for OptimalIntegrationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} optimal GIM, q = {}, interval {}",
            self.rows,
            self.cols,
            self.order,
            self.interval.tag()
        )
    }
}

/// Parsed optimal-matrix CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalCsv {
    pub matrix: MatrixCsv,
    pub alpha_star: Vec<f64>,
}

impl OptimalCsv {
    pub fn parse(text: &str) -> Result<Self> {
        let (matrix, rest) = MatrixCsv::split_block(text)?;
        let mut lines = rest.lines();
        csv::expect_header(lines.next(), "k,alphaStar")?;
        let mut alpha_star = Vec::with_capacity(matrix.rows);
        for k in 0..matrix.rows {
            let f = csv::fields(lines.next(), 2)?;
            if csv::parse_usize(f[0])? != k {
                return Err(Error::InvalidInput(format!("alphaStar row {k} out of order")));
            }
            alpha_star.push(csv::parse_f64(f[1])?);
        }
        Ok(Self { matrix, alpha_star })
    }
}

fn objective(x_k: f64, m: usize, alpha: f64) -> f64 {
    match GegenbauerParam::new(alpha).and_then(|p| poly::eta(x_k, m, p)) {
        Ok(v) if (v * v).is_finite() => v * v,
        _ => f64::INFINITY,
    }
}

fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > GOLDEN_TOL {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// `argmin η²(x_k, m, α)` over `(-1/2 + ε, r]`.
///
/// A 64-point grid (plus the classical parameters 0 and 1/2) seeds a
/// golden-section search on the bracket around the best sample. Points where
/// the objective overflows are skipped. Minimizers that reach the lower end
/// of the domain are replaced by `α_b`.
pub fn optimize_alpha(x_k: f64, m: usize, config: &OptimalConfig) -> Result<f64> {
    config.validate()?;
    if !(-1.0..=1.0).contains(&x_k) {
        return Err(Error::InvalidInput(format!("node {x_k} outside [-1, 1]")));
    }
    let lo = -0.5 + config.epsilon;
    let hi = config.r;
    let f = |a: f64| objective(x_k, m, a);

    let grid: Vec<f64> = (0..GRID_SAMPLES)
        .map(|i| lo + (hi - lo) * (i + 1) as f64 / GRID_SAMPLES as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|&a| f(a)).collect();
    let (best, &best_val) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is non-empty");
    if !best_val.is_finite() {
        return Err(Error::Overflow("eta"));
    }
    let left = if best == 0 { lo } else { grid[best - 1] };
    let right = grid[(best + 1).min(GRID_SAMPLES - 1)];
    let (refined, refined_val) = golden_section(f, left, right);

    let mut candidates = vec![(grid[best], best_val), (refined, refined_val)];
    for a in [0.0, 0.5] {
        if a > lo && a <= hi {
            candidates.push((a, f(a)));
        }
    }
    let (mut alpha, _) = candidates
        .into_iter()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("candidates are non-empty");
    // η² → 0 as α → -1/2, so a boundary minimizer is the critical-interval
    // case; the search only resolves α to GOLDEN_TOL.
    if alpha > -0.5 && alpha < lo + GOLDEN_TOL {
        alpha = config.alpha_b_value();
    }
    Ok(alpha)
}

/// Adjoint GG rule with `m + 1` nodes for `α*` and its stable barycentric weights.
pub fn optimal_bary_basis(m: usize, alpha_star: f64) -> Result<AdjointRule> {
    let rule = gauss::gg_rule(m, GegenbauerParam::new(alpha_star)?)?;
    let basis = bary_weights_gg(&rule);
    Ok(AdjointRule { rule, basis })
}

fn check_targets(targets: &[f64]) -> Result<()> {
    if targets.is_empty() {
        return Err(Error::InvalidInput("no target nodes".into()));
    }
    match targets.iter().find(|x| !(-1.0..=1.0).contains(*x)) {
        Some(x) => Err(Error::InvalidInput(format!("target node {x} outside [-1, 1]"))),
        None => Ok(()),
    }
}

/// Tests `|t_s - (1 - x_k + 2 x_i)/(1 + x_k)| > ε` for the fixed-parameter
/// fallback, with `t_s` the `⌈(m - 1)/2⌉`-degree LG nodes and `x_i` the GG
/// nodes of `α_a`. Rows with `x_k = -1` integrate over an empty interval and
/// are skipped.
pub fn check_condition_mmax(
    targets: &[f64],
    m: usize,
    alpha_a: FallbackAlpha,
    epsilon: f64,
) -> Result<FeasibilityReport> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidInput(format!("epsilon must be positive, got {epsilon}")));
    }
    check_targets(targets)?;
    let rule = gauss::gg_rule(m, alpha_a.param())?;
    let lg = gauss::lg_rule_cached(gim::inner_lg_degree(m));
    Ok(literal_collisions(targets, |_| rule.nodes(), lg.nodes(), epsilon))
}

fn literal_collisions<'a>(
    targets: &[f64],
    sources: impl Fn(usize) -> &'a [f64],
    lg_nodes: &[f64],
    epsilon: f64,
) -> FeasibilityReport {
    let mut violations = Vec::new();
    for (k, &xk) in targets.iter().enumerate() {
        if xk == -1.0 {
            continue;
        }
        for (i, &z) in sources(k).iter().enumerate() {
            let t = (1.0 - xk + 2.0 * z) / (1.0 + xk);
            for (s, &ts) in lg_nodes.iter().enumerate() {
                if (ts - t).abs() <= epsilon {
                    violations.push(Collision { source: i, target: k, lg: s });
                }
            }
        }
    }
    FeasibilityReport {
        feasible: violations.is_empty(),
        violations,
    }
}

fn inner_degree(m: usize, targets: &[f64]) -> usize {
    let big_m = gim::inner_lg_degree(m);
    if m % 2 == 0 && big_m % 2 == 0 && targets.contains(&1.0) {
        big_m + 1
    } else {
        big_m
    }
}

fn fallback(targets: &[f64], config: &OptimalConfig) -> Result<OptimalIntegrationMatrix> {
    let m = config.m;
    let param = config.alpha_a.param();
    let p = gim::build_gim_arbitrary_with_eps(targets, m, param, config.epsilon)?;
    let adj = optimal_bary_basis(m, param.value())?;
    Ok(OptimalIntegrationMatrix {
        rows: p.rows(),
        cols: p.cols(),
        entries: p.entries().to_vec(),
        order: 1,
        interval: Interval::Symmetric,
        target_nodes: targets.to_vec(),
        sample_nodes: vec![adj.rule.nodes().to_vec(); targets.len()],
        alpha_star: vec![param.value(); targets.len()],
        adjoint: vec![adj; targets.len()],
    })
}

fn assemble(
    targets: &[f64],
    config: &OptimalConfig,
    alpha_star: Vec<f64>,
    adjoint: Vec<AdjointRule>,
) -> Result<OptimalIntegrationMatrix> {
    let m = config.m;
    let lg = gauss::lg_rule_cached(inner_degree(m, targets));
    literal_collisions(targets, |k| adjoint[k].rule.nodes(), lg.nodes(), config.epsilon).into_result()?;
    let cols = m + 1;
    let mut entries = Vec::with_capacity(targets.len() * cols);
    for (adj, &xk) in adjoint.iter().zip(targets) {
        entries.extend(gim::integrate_rows(&adj.basis, &[xk], &lg, 0.0));
    }
    Ok(OptimalIntegrationMatrix {
        rows: targets.len(),
        cols,
        entries,
        order: 1,
        interval: Interval::Symmetric,
        target_nodes: targets.to_vec(),
        sample_nodes: adjoint.iter().map(|a| a.rule.nodes().to_vec()).collect(),
        alpha_star,
        adjoint,
    })
}

/// Optimal GIM for arbitrary targets in `[-1, 1]`.
pub fn build_optimal_gim(targets: &[f64], config: &OptimalConfig) -> Result<OptimalIntegrationMatrix> {
    config.validate()?;
    check_targets(targets)?;
    if config.m > config.m_max {
        return fallback(targets, config);
    }
    let mut alpha_star = Vec::with_capacity(targets.len());
    let mut adjoint = Vec::with_capacity(targets.len());
    for &xk in targets {
        let a = optimize_alpha(xk, config.m, config)?;
        adjoint.push(optimal_bary_basis(config.m, a)?);
        alpha_star.push(a);
    }
    assemble(targets, config, alpha_star, adjoint)
}

/// Optimal GIM for targets symmetric about 0 and even `m`: the parameter
/// search and adjoint rules are computed for the first half only.
pub fn build_optimal_gim_symmetric(targets: &[f64], config: &OptimalConfig) -> Result<OptimalIntegrationMatrix> {
    config.validate()?;
    check_targets(targets)?;
    if config.m % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "the symmetric construction needs even m, got {}",
            config.m
        )));
    }
    let n1 = targets.len();
    for k in 0..n1 / 2 {
        if (targets[k] + targets[n1 - 1 - k]).abs() > 4.0 * f64::EPSILON {
            return Err(Error::InvalidInput(format!(
                "targets not symmetric: x[{k}] = {}, x[{}] = {}",
                targets[k],
                n1 - 1 - k,
                targets[n1 - 1 - k]
            )));
        }
    }
    if config.m > config.m_max {
        return fallback(targets, config);
    }
    let half = n1 / 2;
    let mut alpha_star = vec![0.0; n1];
    let mut adjoint: Vec<Option<AdjointRule>> = vec![None; n1];
    for k in 0..=half.min(n1 - 1) {
        if adjoint[k].is_some() {
            continue;
        }
        let a = optimize_alpha(targets[k], config.m, config)?;
        let adj = optimal_bary_basis(config.m, a)?;
        alpha_star[k] = a;
        alpha_star[n1 - 1 - k] = a;
        adjoint[n1 - 1 - k] = Some(adj.clone());
        adjoint[k] = Some(adj);
    }
    let adjoint = adjoint.into_iter().map(|a| a.expect("every row filled")).collect();
    assemble(targets, config, alpha_star, adjoint)
}

/// `q`-th order optimal matrix.
pub fn qth_order_optimal(first: &OptimalIntegrationMatrix, q: u32) -> Result<OptimalIntegrationMatrix> {
    first.qth_order(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(a: f64) -> GegenbauerParam {
        GegenbauerParam::new(a).unwrap()
    }

    fn gg_nodes(n: usize, a: f64) -> Vec<f64> {
        gauss::gg_rule(n, p(a)).unwrap().nodes().to_vec()
    }

    #[test]
    fn config_validation() {
        assert!(OptimalConfig::new(8).validate().is_ok());
        let bad_r = OptimalConfig { r: 2.5, ..OptimalConfig::new(8) };
        assert!(bad_r.validate().is_err());
        let bad_eps = OptimalConfig { epsilon: 0.0, ..OptimalConfig::new(8) };
        assert!(bad_eps.validate().is_err());
        assert_eq!(
            OptimalConfig { alpha_b: NearBoundary::ShiftedBoundary, ..OptimalConfig::new(2) }.alpha_b_value(),
            -0.5 + f64::EPSILON
        );
    }

    #[test]
    fn alpha_star_symmetry_and_minimality() {
        let cfg = OptimalConfig::new(8);
        for &x in &[0.1, 0.45, 0.83, 1.0] {
            let a = optimize_alpha(x, 8, &cfg).unwrap();
            assert_eq!(a, optimize_alpha(-x, 8, &cfg).unwrap());
            assert!(a > -0.5 && a <= cfg.r);
            let best = objective(x, 8, a);
            assert!(best <= objective(x, 8, 0.0));
            assert!(best <= objective(x, 8, 0.5));
        }
        assert!(optimize_alpha(1.5, 8, &cfg).is_err());
    }

    #[test]
    fn adjoint_basis_examples() {
        let adj = optimal_bary_basis(6, 0.5).unwrap();
        let lg = gauss::lg_rule(6).unwrap();
        assert_eq!(adj.rule.nodes(), lg.nodes());
        assert!(adj.basis.weights().windows(2).all(|w| w[0] * w[1] < 0.0));
        let b1 = optimal_bary_basis(1, 0.5).unwrap().basis;
        let v = (2.0f64 / 3.0).sqrt();
        assert_relative_eq!(b1.weights()[0], v, epsilon = 1e-15);
    }

    #[test]
    fn rows_are_exact_for_degree_m() {
        let targets = [-1.0, -0.71, -0.2, 0.0, 0.33, 0.9, 1.0];
        for m in [2, 5, 8, 13] {
            let pm = build_optimal_gim(&targets, &OptimalConfig::new(m)).unwrap();
            assert_eq!((pm.rows(), pm.cols()), (targets.len(), m + 1));
            for deg in 0..=m as i32 {
                for (k, &x) in targets.iter().enumerate() {
                    let exact = (x.powi(deg + 1) - (-1f64).powi(deg + 1)) / (deg + 1) as f64;
                    let got = pm.integrate_row(k, |t| t.powi(deg));
                    assert!((got - exact).abs() < 1e-12, "m={m} deg={deg} k={k}");
                }
            }
        }
    }

    #[test]
    fn symmetric_path_matches_general_path() {
        let targets = gg_nodes(8, 0.5);
        let cfg = OptimalConfig::new(8);
        let general = build_optimal_gim(&targets, &cfg).unwrap();
        let fast = build_optimal_gim_symmetric(&targets, &cfg).unwrap();
        assert!(general.max_abs_diff(&fast) <= 1e-12);
        let a = fast.alpha_star();
        assert!((0..a.len()).all(|k| a[k] == a[a.len() - 1 - k]));
        assert_eq!(a, general.alpha_star());
        assert!(build_optimal_gim_symmetric(&targets, &OptimalConfig::new(7)).is_err());
        assert!(build_optimal_gim_symmetric(&[-0.5, 0.4], &cfg).is_err());
    }

    #[test]
    fn fallback_equals_square_gim() {
        for &(m, alpha_a) in &[(22, FallbackAlpha::Chebyshev), (21, FallbackAlpha::Legendre)] {
            let cfg = OptimalConfig { alpha_a, ..OptimalConfig::new(m) };
            let targets = gg_nodes(m, alpha_a.value());
            let pm = build_optimal_gim(&targets, &cfg).unwrap();
            let sq = gim::build_gim_gg(m, alpha_a.param()).unwrap();
            assert_eq!(pm.entries(), sq.entries());
            assert!(pm.alpha_star().iter().all(|&a| a == alpha_a.value()));
        }
    }

    #[test]
    fn mmax_condition_examples() {
        let targets = [-0.9, -0.3, 0.2, 0.7];
        assert!(check_condition_mmax(&targets, 6, FallbackAlpha::Chebyshev, f64::EPSILON).unwrap().feasible);
        assert!(check_condition_mmax(&[-1.0], 6, FallbackAlpha::Chebyshev, f64::EPSILON).unwrap().feasible);
        assert!(check_condition_mmax(&targets, 6, FallbackAlpha::Chebyshev, 0.0).is_err());

        // Solve t_s = (1 - x + 2 z_i)/(1 + x) for x with s = 0, i = 0.
        let z = gg_nodes(6, 0.0)[0];
        let t = gauss::lg_rule(3).unwrap().nodes()[0];
        let x = (1.0 + 2.0 * z - t) / (1.0 + t);
        let report = check_condition_mmax(&[x], 6, FallbackAlpha::Chebyshev, 1e-12).unwrap();
        assert!(!report.feasible);
        assert!(report.violations.contains(&Collision { source: 0, target: 0, lg: 0 }));
    }

    #[test]
    fn qth_order_and_unit_interval() {
        let targets = gg_nodes(6, 0.5);
        let first = build_optimal_gim(&targets, &OptimalConfig::new(8)).unwrap();
        assert_eq!(first.qth_order(1).unwrap(), first);
        assert!(first.qth_order(0).is_err());
        let second = first.qth_order(2).unwrap();
        // ∫_{-1}^{x} (x - t) t^k dt for k = 0..=7
        for deg in 0..=7i32 {
            let d = deg as f64;
            let exact = |x: f64| {
                let lo = -1f64;
                x * (x.powi(deg + 1) - lo.powi(deg + 1)) / (d + 1.0) - (x.powi(deg + 2) - lo.powi(deg + 2)) / (d + 2.0)
            };
            for (k, v) in second.integrate(|t| t.powi(deg)).iter().enumerate() {
                assert!((v - exact(targets[k])).abs() < 1e-10);
            }
        }
        let unit = second.to_unit_interval();
        for (k, v) in unit.integrate(|t| t).iter().enumerate() {
            let y = unit.target_nodes()[k];
            assert!((v - y.powi(3) / 6.0).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_round_trip() {
        let pm = build_optimal_gim(&[-0.4, 0.6], &OptimalConfig::new(4)).unwrap();
        let parsed = OptimalCsv::parse(&pm.to_csv()).unwrap();
        assert_eq!(parsed.matrix.entries, pm.entries());
        assert_eq!(parsed.alpha_star, pm.alpha_star());
        assert!(parsed.matrix.alpha.is_nan());
    }
}
