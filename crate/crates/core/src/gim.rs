//! Barycentric Gegenbauer integration matrices (GIMs).
//!
//! Row `j` of a first-order GIM maps samples `f(x_i)` at the Gegenbauer–Gauss
//! nodes to `∫_{-1}^{x_j} P f`, where `P f` is the barycentric interpolant.
//! Each row integral is evaluated by a Legendre–Gauss rule with `N + 1`
//! points mapped onto `[-1, x_j]`, `N = ⌈(n - 1)/2⌉`, which is exact for the
//! degree-`n` interpolant.
//!
//! The mapped Legendre node `x̂_k = ((x_j + 1) t_k + x_j - 1) / 2` can land on
//! an interpolation node, which makes the barycentric quotient `0/0`. The
//! plain constructor refuses such inputs, the guarded one substitutes the
//! cardinal vector, and the bumped one retries with one more Legendre node.

use std::fmt;

use nalgebra::DMatrix;

use crate::barycentric::{bary_weights_gg, BarycentricBasis};
use crate::csv;
use crate::error::{Collision, Error, Result};
use crate::gauss::{self, QuadratureRule};
use crate::poly::{self, GegenbauerParam};

/// Default collision tolerance.
pub const DEFAULT_EPSILON: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// `[-1, 1]`
    Symmetric,
    /// `[0, 1]`
    Unit,
}

impl Interval {
    pub fn tag(self) -> &'static str {
        match self {
            Interval::Symmetric => "-1..1",
            Interval::Unit => "0..1",
        }
    }

    fn from_tag(tag: &str) -> Result<Self> {
        match tag.trim() {
            "-1..1" => Ok(Interval::Symmetric),
            "0..1" => Ok(Interval::Unit),
            other => Err(Error::InvalidInput(format!("unknown interval {other:?}"))),
        }
    }
}

/// Outcome of a sufficient-condition test.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub violations: Vec<Collision>,
}

impl FeasibilityReport {
    fn from_violations(violations: Vec<Collision>) -> Self {
        Self {
            feasible: violations.is_empty(),
            violations,
        }
    }

    pub(crate) fn into_result(self) -> Result<()> {
        if self.feasible {
            Ok(())
        } else {
            Err(Error::Infeasible(self.violations))
        }
    }
}

/// Dense row-major integration matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
    order: u32,
    alpha: f64,
    source_nodes: Vec<f64>,
    target_nodes: Vec<f64>,
    interval: Interval,
}

impl IntegrationMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Gegenbauer parameter of the source nodes.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn source_nodes(&self) -> &[f64] {
        &self.source_nodes
    }

    pub fn target_nodes(&self) -> &[f64] {
        &self.target_nodes
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

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.entries)
    }

    /// Largest entrywise difference to another matrix of the same shape.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Quadrature `I = P F`.
    pub fn apply(&self, values: &[f64]) -> Result<Vec<f64>> {
        if values.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: values.len(),
            });
        }
        Ok((0..self.rows)
            .map(|j| self.row(j).iter().zip(values).map(|(p, f)| p * f).sum())
            .collect())
    }

    /// Samples `f` at the source nodes and applies the quadrature.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let values: Vec<f64> = self.source_nodes.iter().map(|&x| f(x)).collect();
        self.apply(&values).expect("sample count matches columns")
    }

    /// `q`-th order matrix: `p^(q)_{j,i} = (x_j - x_i)^(q-1) / (q-1)! · p^(1)_{j,i}`.
    ///
    /// Applied to samples of `f` it approximates the `q`-fold integral
    /// `∫_{a}^{x_j} (x_j - t)^(q-1) / (q-1)! f(t) dt`. On `[0, 1]` the mapped
    /// node differences carry the `2^-q` scaling automatically.
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
            for (i, &xi) in self.source_nodes.iter().enumerate() {
                out.entries[j * self.cols + i] *= (xj - xi).powi(q as i32 - 1) / fact;
            }
        }
        Ok(out)
    }

    /// The same operator on `[0, 1]`: nodes mapped by `y = (x + 1)/2` and
    /// entries divided by `2^q`.
    pub fn to_unit_interval(&self) -> Self {
        if self.interval == Interval::Unit {
            return self.clone();
        }
        let scale = 0.5f64.powi(self.order as i32);
        let map = |v: &[f64]| v.iter().map(|x| 0.5 * (x + 1.0)).collect::<Vec<_>>();
        Self {
            entries: self.entries.iter().map(|p| p * scale).collect(),
            source_nodes: map(&self.source_nodes),
            target_nodes: map(&self.target_nodes),
            interval: Interval::Unit,
            ..self.clone()
        }
    }

    /// Header `rows,cols,q,alpha,interval`, its values, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rows,cols,q,alpha,interval\n");
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            self.rows,
            self.cols,
            self.order,
            csv::fmt(self.alpha),
            self.interval.tag()
        ));
        for j in 0..self.rows {
            out.push_str(&csv::join(self.row(j).iter().copied()));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for IntegrationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} GIM, q = {}, alpha = {}, interval {}",
            self.rows,
            self.cols,
            self.order,
            self.alpha,
            self.interval.tag()
        )
    }
}

/// Parsed form of the matrix CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixCsv {
    pub rows: usize,
    pub cols: usize,
    pub order: u32,
    pub alpha: f64,
    pub interval: Interval,
    pub entries: Vec<f64>,
}

impl MatrixCsv {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        csv::expect_header(lines.next(), "rows,cols,q,alpha,interval")?;
        let meta = csv::fields(lines.next(), 5)?;
        let rows = csv::parse_usize(meta[0])?;
        let cols = csv::parse_usize(meta[1])?;
        let order = csv::parse_usize(meta[2])? as u32;
        let alpha = csv::parse_f64(meta[3])?;
        let interval = Interval::from_tag(meta[4])?;
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            for f in csv::fields(lines.next(), cols)? {
                entries.push(csv::parse_f64(f)?);
            }
        }
        Ok(Self {
            rows,
            cols,
            order,
            alpha,
            interval,
            entries,
        })
    }

    /// Returns the unparsed remainder after the matrix block.
    pub(crate) fn split_block(text: &str) -> Result<(Self, &str)> {
        let meta_line = text.lines().nth(1).unwrap_or_default();
        let rows = csv::parse_usize(meta_line.split(',').next().unwrap_or_default())?;
        let mut offset = 0;
        for (count, line) in text.split_inclusive('\n').enumerate() {
            offset += line.len();
            if count + 1 == rows + 2 {
                break;
            }
        }
        Ok((Self::parse(&text[..offset])?, &text[offset..]))
    }
}

/// `N = ⌈(n - 1)/2⌉` for the inner Legendre rule.
pub(crate) fn inner_lg_degree(n: usize) -> usize {
    n / 2
}

/// Row-by-row integration of the barycentric interpolant on `[-1, x_j]`.
///
/// Evaluation points within `hit_tol` of a node take the cardinal value.
pub(crate) fn integrate_rows(
    basis: &BarycentricBasis,
    targets: &[f64],
    lg: &QuadratureRule,
    hit_tol: f64,
) -> Vec<f64> {
    let cols = basis.len();
    let mut entries = vec![0.0; targets.len() * cols];
    let mut cardinals = vec![0.0; cols];
    for (row, &xj) in entries.chunks_mut(cols).zip(targets) {
        for (&t, &w) in lg.nodes().iter().zip(lg.weights()) {
            let x_hat = ((xj + 1.0) * t + xj - 1.0) / 2.0;
            basis.cardinals_into(x_hat, hit_tol, &mut cardinals);
            for (p, l) in row.iter_mut().zip(&cardinals) {
                *p += w * l;
            }
        }
        let half = (xj + 1.0) / 2.0;
        row.iter_mut().for_each(|p| *p *= half);
    }
    entries
}

/// Collisions `|1 + t_k - 2(1 + x_i)/(1 + x_j)| <= ε` between mapped Legendre
/// nodes `t_k` and source nodes `x_i`, for every target `x_j`.
pub(crate) fn collisions(sources: &[f64], targets: &[f64], lg_nodes: &[f64], epsilon: f64) -> Vec<Collision> {
    let mut out = Vec::new();
    for (j, &xj) in targets.iter().enumerate() {
        for (k, &t) in lg_nodes.iter().enumerate() {
            for (i, &xi) in sources.iter().enumerate() {
                if (1.0 + t - 2.0 * (1.0 + xi) / (1.0 + xj)).abs() <= epsilon {
                    out.push(Collision { source: i, target: j, lg: k });
                }
            }
        }
    }
    out
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("epsilon must be positive, got {epsilon}")))
    }
}

/// Tests the sufficient condition for building the square GIM on GG nodes.
pub fn check_gg_condition(n: usize, param: GegenbauerParam, epsilon: f64) -> Result<FeasibilityReport> {
    check_epsilon(epsilon)?;
    let rule = gauss::gg_rule(n, param)?;
    let lg = gauss::lg_rule_cached(inner_lg_degree(n));
    Ok(FeasibilityReport::from_violations(collisions(
        rule.nodes(),
        rule.nodes(),
        lg.nodes(),
        epsilon,
    )))
}

fn square(rule: &QuadratureRule, entries: Vec<f64>) -> IntegrationMatrix {
    let n1 = rule.len();
    IntegrationMatrix {
        rows: n1,
        cols: n1,
        entries,
        order: 1,
        alpha: rule.kind().param().value(),
        source_nodes: rule.nodes().to_vec(),
        target_nodes: rule.nodes().to_vec(),
        interval: Interval::Symmetric,
    }
}

/// First-order barycentric GIM on the `n + 1` GG nodes.
///
/// Fails with [`Error::Infeasible`] naming the colliding `(i, j, k)` when the
/// sufficient condition does not hold at `ε = ε_mach`.
pub fn build_gim_gg(n: usize, param: GegenbauerParam) -> Result<IntegrationMatrix> {
    let rule = gauss::gg_rule(n, param)?;
    let lg = gauss::lg_rule_cached(inner_lg_degree(n));
    FeasibilityReport::from_violations(collisions(rule.nodes(), rule.nodes(), lg.nodes(), DEFAULT_EPSILON))
        .into_result()?;
    let basis = bary_weights_gg(&rule);
    let entries = integrate_rows(&basis, rule.nodes(), &lg, 0.0);
    Ok(square(&rule, entries))
}

/// GIM that replaces barycentric quotients at node hits (`|x̂ - x_i| <= ε`)
/// with the cardinal values `L_i = 1`, `L_l = 0` for `l ≠ i`.
pub fn build_gim_gg_guarded(n: usize, param: GegenbauerParam, epsilon: f64) -> Result<IntegrationMatrix> {
    check_epsilon(epsilon)?;
    let rule = gauss::gg_rule(n, param)?;
    let lg = gauss::lg_rule_cached(inner_lg_degree(n));
    let basis = bary_weights_gg(&rule);
    let entries = integrate_rows(&basis, rule.nodes(), &lg, epsilon);
    Ok(square(&rule, entries))
}

/// GIM that switches to `N = ⌈(n + 1)/2⌉` Legendre degree when the default
/// inner rule violates the sufficient condition.
pub fn build_gim_gg_bumped(n: usize, param: GegenbauerParam, epsilon: f64) -> Result<IntegrationMatrix> {
    check_epsilon(epsilon)?;
    let rule = gauss::gg_rule(n, param)?;
    let basis = bary_weights_gg(&rule);
    let mut big_n = inner_lg_degree(n);
    let mut lg = gauss::lg_rule_cached(big_n);
    let first = collisions(rule.nodes(), rule.nodes(), lg.nodes(), epsilon);
    if !first.is_empty() {
        big_n += 1;
        lg = gauss::lg_rule_cached(big_n);
        FeasibilityReport::from_violations(collisions(rule.nodes(), rule.nodes(), lg.nodes(), epsilon))
            .into_result()?;
    }
    let entries = integrate_rows(&basis, rule.nodes(), &lg, 0.0);
    Ok(square(&rule, entries))
}

/// Legendre degree for rows that contain the endpoint `1`: with `n` and `N`
/// both even, `0` is both a GG and a LG node, so `N` grows by one.
fn endpoint_lg_degree(n: usize) -> usize {
    let big_n = inner_lg_degree(n);
    if n % 2 == 0 && big_n % 2 == 0 {
        big_n + 1
    } else {
        big_n
    }
}

/// Coefficients of the quadrature `∫_{-1}^{1} f ≈ Σ_i p_i f(x_i)` on GG nodes.
pub fn row_gim_endpoint(n: usize, param: GegenbauerParam) -> Result<Vec<f64>> {
    let rule = gauss::gg_rule(n, param)?;
    Ok(row_endpoint_from_basis(&bary_weights_gg(&rule)))
}

/// Endpoint row for precomputed barycentric data on GG nodes.
pub fn row_endpoint_from_basis(basis: &BarycentricBasis) -> Vec<f64> {
    let lg = gauss::lg_rule_cached(endpoint_lg_degree(basis.len() - 1));
    integrate_rows(basis, &[1.0], &lg, DEFAULT_EPSILON)
}

/// `(m + 1) × (n + 1)` GIM integrating the degree-`n` GG interpolant over
/// `[-1, x_j]` for arbitrary targets `x_j ∈ [-1, 1]`.
pub fn build_gim_arbitrary(targets: &[f64], n: usize, param: GegenbauerParam) -> Result<IntegrationMatrix> {
    build_gim_arbitrary_with_eps(targets, n, param, DEFAULT_EPSILON)
}

pub fn build_gim_arbitrary_with_eps(
    targets: &[f64],
    n: usize,
    param: GegenbauerParam,
    epsilon: f64,
) -> Result<IntegrationMatrix> {
    check_epsilon(epsilon)?;
    if targets.is_empty() {
        return Err(Error::InvalidInput("no target nodes".into()));
    }
    if let Some(x) = targets.iter().find(|x| !(-1.0..=1.0).contains(*x)) {
        return Err(Error::InvalidInput(format!("target node {x} outside [-1, 1]")));
    }
    let rule = gauss::gg_rule(n, param)?;
    let big_n = if targets.contains(&1.0) {
        endpoint_lg_degree(n)
    } else {
        inner_lg_degree(n)
    };
    let lg = gauss::lg_rule_cached(big_n);
    FeasibilityReport::from_violations(collisions(rule.nodes(), targets, lg.nodes(), epsilon)).into_result()?;
    let basis = bary_weights_gg(&rule);
    Ok(IntegrationMatrix {
        rows: targets.len(),
        cols: rule.len(),
        entries: integrate_rows(&basis, targets, &lg, 0.0),
        order: 1,
        alpha: param.value(),
        source_nodes: rule.nodes().to_vec(),
        target_nodes: targets.to_vec(),
        interval: Interval::Symmetric,
    })
}

/// `q`-th order matrix from a first-order one.
pub fn qth_order_gim(first: &IntegrationMatrix, q: u32) -> Result<IntegrationMatrix> {
    first.qth_order(q)
}

/// `I = P F`.
pub fn apply_quadrature(matrix: &IntegrationMatrix, values: &[f64]) -> Result<Vec<f64>> {
    matrix.apply(values)
}

/// Basis-form GIM: integrates the Lagrange polynomials
/// `L_k(x) = ϖ_k Σ_j λ_j^{-1} G_j(x_k) G_j(x)` term by term.
///
/// Mathematically equal to [`build_gim_gg`]; kept as the `O(n³)` baseline.
pub fn build_basis_gim(n: usize, param: GegenbauerParam) -> Result<IntegrationMatrix> {
    let rule = gauss::gg_rule(n, param)?;
    let lambda = poly::norms(n, param);
    let n1 = rule.len();
    // scaled[k][j] = ϖ_k G_j(x_k) / λ_j
    let scaled: Vec<Vec<f64>> = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&x, &w)| {
            poly::values_upto(n, param, x)
                .iter()
                .zip(&lambda)
                .map(|(g, l)| w * g / l)
                .collect()
        })
        .collect();
    let mut entries = Vec::with_capacity(n1 * n1);
    for &xl in rule.nodes() {
        let integrals = poly::integrals_from_minus_one(n, param, xl);
        for row_k in &scaled {
            entries.push(row_k.iter().zip(&integrals).map(|(s, i)| s * i).sum());
        }
    }
    Ok(square(&rule, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(a: f64) -> GegenbauerParam {
        GegenbauerParam::new(a).unwrap()
    }

    fn eps() -> f64 {
        f64::EPSILON
    }

    #[test]
    fn rows_integrate_constants_and_linears() {
        let m = build_gim_gg(8, p(0.3)).unwrap();
        let ones = m.integrate(|_| 1.0);
        let lin = m.integrate(|x| x);
        for (j, &x) in m.target_nodes().iter().enumerate() {
            assert!((ones[j] - (x + 1.0)).abs() < 1e-13);
            assert!((lin[j] - (x * x - 1.0) / 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn two_node_legendre_matrix_matches_hand_integrals() {
        let m = build_gim_gg(1, p(0.5)).unwrap();
        let s = 1.0 / 3f64.sqrt();
        let nodes = [-s, s];
        // L_0 = (s - t)/(2s), L_1 = (t + s)/(2s); integrate from -1 to x.
        let int_l0 = |x: f64| (s * (x + 1.0) - (x * x - 1.0) / 2.0) / (2.0 * s);
        let int_l1 = |x: f64| ((x * x - 1.0) / 2.0 + s * (x + 1.0)) / (2.0 * s);
        for (j, &x) in nodes.iter().enumerate() {
            assert_relative_eq!(m.get(j, 0), int_l0(x), epsilon = 1e-15);
            assert_relative_eq!(m.get(j, 1), int_l1(x), epsilon = 1e-15);
        }
    }

    #[test]
    fn plain_construction_fails_at_known_collision() {
        let report = check_gg_condition(4, p(1.0), eps()).unwrap();
        assert!(!report.feasible);
        // x̂ = (0 - 1)/2 hits -1/2 for target 0, LG node 0.
        assert!(report.violations.contains(&Collision { source: 1, target: 2, lg: 1 }));
        match build_gim_gg(4, p(1.0)) {
            Err(Error::Infeasible(v)) => assert!(!v.is_empty()),
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn feasibility_examples() {
        assert!(check_gg_condition(10, p(0.5), eps()).unwrap().feasible);
        for &a in &[-0.4, 0.0, 0.5, 1.0, 2.0] {
            assert!(check_gg_condition(1, p(a), eps()).unwrap().feasible);
        }
        assert!(check_gg_condition(3, p(0.5), 0.0).is_err());
        assert!(check_gg_condition(3, p(0.5), -1.0).is_err());
    }

    #[test]
    fn guarded_and_bumped_agree_with_plain_when_feasible() {
        let plain = build_gim_gg(10, p(0.0)).unwrap();
        let guarded = build_gim_gg_guarded(10, p(0.0), eps()).unwrap();
        assert!(plain.max_abs_diff(&guarded) <= 1e-14);
        let plain = build_gim_gg(10, p(0.5)).unwrap();
        let bumped = build_gim_gg_bumped(10, p(0.5), eps()).unwrap();
        assert!(plain.max_abs_diff(&bumped) <= 1e-13);
    }

    #[test]
    fn guarded_and_bumped_recover_infeasible_point() {
        for m in [
            build_gim_gg_guarded(4, p(1.0), eps()).unwrap(),
            build_gim_gg_bumped(4, p(1.0), eps()).unwrap(),
        ] {
            assert!(m.entries().iter().all(|e| e.is_finite()));
            let ones = m.integrate(|_| 1.0);
            let cubes = m.integrate(|x| x.powi(4));
            for (j, &x) in m.target_nodes().iter().enumerate() {
                assert!((ones[j] - (x + 1.0)).abs() < 1e-13);
                assert!((cubes[j] - (x.powi(5) + 1.0) / 5.0).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn endpoint_row_examples() {
        for &(n, a) in &[(3, 0.2), (4, 1.0), (4, 0.5), (9, -0.3), (12, 2.0)] {
            let row = row_gim_endpoint(n, p(a)).unwrap();
            let rule = gauss::gg_rule(n, p(a)).unwrap();
            let dot = |f: &dyn Fn(f64) -> f64| -> f64 {
                row.iter().zip(rule.nodes()).map(|(w, &x)| w * f(x)).sum()
            };
            assert_relative_eq!(dot(&|_| 1.0), 2.0, epsilon = 1e-14);
            assert!(dot(&|x| x).abs() < 1e-14);
        }
        assert_eq!(endpoint_lg_degree(4), 3);
        assert_eq!(endpoint_lg_degree(6), 3);
        assert_eq!(endpoint_lg_degree(5), 2);
    }

    #[test]
    fn arbitrary_targets_reduce_to_special_cases() {
        let rule = gauss::gg_rule(9, p(0.7)).unwrap();
        let gg = build_gim_gg(9, p(0.7)).unwrap();
        let arb = build_gim_arbitrary(rule.nodes(), 9, p(0.7)).unwrap();
        assert_eq!(gg.entries(), arb.entries());

        for &(n, a) in &[(4, 0.3), (7, 1.0), (8, 0.0)] {
            let end = build_gim_arbitrary(&[1.0], n, p(a)).unwrap();
            assert_eq!(end.row(0), row_gim_endpoint(n, p(a)).unwrap().as_slice());
        }

        let targets = [-1.0, -0.3, 0.25, 0.9];
        let m = build_gim_arbitrary(&targets, 6, p(0.1)).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 7));
        for (j, v) in m.integrate(|_| 1.0).iter().enumerate() {
            assert!((v - (targets[j] + 1.0)).abs() < 1e-14);
        }
        assert!(build_gim_arbitrary(&[1.2], 6, p(0.1)).is_err());
    }

    #[test]
    fn qth_order_examples() {
        let first = build_gim_gg(10, p(0.4)).unwrap();
        assert_eq!(first.qth_order(1).unwrap(), first);
        assert!(first.qth_order(0).is_err());
        let second = first.qth_order(2).unwrap();
        assert!(second.qth_order(3).is_err());
        // ∫_{-1}^{x} (x - t) t^3 dt = (x^5 + 1)/5·... computed in closed form
        let exact = |x: f64| x * (x.powi(4) - 1.0) / 4.0 - (x.powi(5) + 1.0) / 5.0;
        let got = second.integrate(|t| t.powi(3));
        for (j, &x) in first.target_nodes().iter().enumerate() {
            assert!((got[j] - exact(x)).abs() < 1e-11);
        }
    }

    #[test]
    fn unit_interval_halves_first_order_entries() {
        let m = build_gim_gg(6, p(0.5)).unwrap();
        let u = m.to_unit_interval();
        assert_eq!(u.interval(), Interval::Unit);
        for (a, b) in m.entries().iter().zip(u.entries()) {
            assert_eq!(*b, a / 2.0);
        }
        let ones = u.integrate(|_| 1.0);
        for (j, &y) in u.target_nodes().iter().enumerate() {
            assert!((ones[j] - y).abs() < 1e-13);
        }
    }

    #[test]
    fn apply_examples() {
        let m = build_gim_gg(5, p(0.0)).unwrap();
        assert_eq!(m.apply(&[0.0; 6]).unwrap(), vec![0.0; 6]);
        assert!(m.apply(&[1.0; 5]).is_err());
    }

    #[test]
    fn basis_form_equals_barycentric_form() {
        for &a in &[-0.25, 0.0, 0.5, 1.0] {
            for n in [1, 6, 15] {
                let bary = build_gim_gg_bumped(n, p(a), eps()).unwrap();
                let basis = build_basis_gim(n, p(a)).unwrap();
                assert!(bary.max_abs_diff(&basis) <= 1e-12, "n={n} a={a}");
                for (j, v) in basis.integrate(|_| 1.0).iter().enumerate() {
                    assert!((v - (basis.target_nodes()[j] + 1.0)).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn csv_layout() {
        let m = build_gim_gg(3, p(0.5)).unwrap();
        let text = m.to_csv();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("rows,cols,q,alpha,interval"));
        assert_eq!(lines.next(), Some("4,4,1,5.0000000000000000e-1,-1..1"));
        let parsed = MatrixCsv::parse(&text).unwrap();
        assert_eq!(parsed.entries, m.entries());
        assert_eq!(parsed.interval, Interval::Symmetric);
        assert!(MatrixCsv::parse("rows,cols,q,alpha,interval\n2,2,1,0.5,-1..1\n1,2\n").is_err());
    }
}
