//! Gegenbauer polynomials standardized by `G_n(1) = 1`.
//!
//! `G_n^(α)` is the symmetric Jacobi polynomial `P_n^(α-1/2, α-1/2)` scaled to
//! take the value one at `x = 1`. With that scaling the three-term recurrence is
//!
//! ```text
//! G_0 = 1,  G_1 = x,
//! (n + 2α) G_{n+1} = 2(n + α) x G_n - n G_{n-1},   n >= 1,
//! ```
//!
//! which stays regular at the Chebyshev point `α = 0`. Norms and leading
//! coefficients are generated from the same recurrence instead of the
//! closed-form Gamma expressions, which are singular at `α = 0`.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::gauss::{self, QuadratureRule, RuleKind};

/// Gegenbauer parameter `α > -1/2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GegenbauerParam(f64);

impl GegenbauerParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > -0.5 {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidParameter(alpha))
        }
    }

    /// The Legendre case `α = 1/2`.
    pub fn legendre() -> Self {
        Self(0.5)
    }

    /// The Chebyshev case `α = 0`.
    pub fn chebyshev() -> Self {
        Self(0.0)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for GegenbauerParam {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

/// Degree and parameter of a single Gegenbauer polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolySpec {
    pub degree: usize,
    pub param: GegenbauerParam,
}

/// Weighted squared norm `λ_n` and leading coefficient `K_n` of `G_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormAndLeading {
    pub norm: f64,
    pub leading: f64,
}

impl PolySpec {
    pub fn new(degree: usize, param: GegenbauerParam) -> Self {
        Self { degree, param }
    }

    /// `G_n^(α)(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        let a = self.param.value();
        let n = self.degree;
        if n == 0 {
            return 1.0;
        }
        let (mut prev, mut cur) = (1.0, x);
        for k in 1..n {
            let kf = k as f64;
            let next = (2.0 * (kf + a) * x * cur - kf * prev) / (kf + 2.0 * a);
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn norm_leading(&self) -> NormAndLeading {
        let a = self.param.value();
        NormAndLeading {
            norm: norms(self.degree, self.param)[self.degree],
            leading: leading_coefficient(self.degree, a),
        }
    }

    /// `∫_{-1}^{x} G_n(t) dt`, exact up to rounding.
    pub fn integral_from_minus_one(&self, x: f64) -> f64 {
        // For odd n the antiderivative from -1 is even in x, so both signs
        // share one evaluation path and the result is exactly symmetric.
        let x = if self.degree % 2 == 1 { -x.abs() } else { x };
        integrals_from_minus_one(self.degree, self.param, x)[self.degree]
    }
}

/// `G_0(x), ..., G_n(x)`.
pub fn values_upto(n: usize, param: GegenbauerParam, x: f64) -> Vec<f64> {
    let a = param.value();
    let mut g = Vec::with_capacity(n + 1);
    g.push(1.0);
    if n >= 1 {
        g.push(x);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 * (kf + a) * x * g[k] - kf * g[k - 1]) / (kf + 2.0 * a);
        g.push(next);
    }
    g
}

/// `(G_n(x), G_n'(x))` from the differentiated recurrence.
pub fn value_and_derivative(n: usize, param: GegenbauerParam, x: f64) -> (f64, f64) {
    let a = param.value();
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut p0, mut p1) = (1.0, x);
    let (mut d0, mut d1) = (0.0, 1.0);
    for k in 1..n {
        let kf = k as f64;
        let c = 2.0 * (kf + a);
        let den = kf + 2.0 * a;
        let p2 = (c * x * p1 - kf * p0) / den;
        let d2 = (c * (p1 + x * d1) - kf * d0) / den;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
    }
    (p1, d1)
}

/// `∫_{-1}^{1} (1 - x²)^(α - 1/2) dx = √π Γ(α + 1/2) / Γ(α + 1)`.
///
/// The gamma ratio is shifted into `α ∈ (-1/2, 1/2]` with
/// `Γ(a + 1/2)/Γ(a + 1) = (a - 1/2)/a · Γ(a - 1/2)/Γ(a)` so that both gamma
/// evaluations stay on small arguments where they are accurate to a few ulp.
pub fn total_mass(param: GegenbauerParam) -> f64 {
    let a = param.value();
    if a > 1024.0 {
        return std::f64::consts::PI.sqrt() * (ln_gamma(a + 0.5) - ln_gamma(a + 1.0)).exp();
    }
    let mut a0 = a;
    let mut factor = 1.0;
    while a0 > 0.5 {
        factor *= (a0 - 0.5) / a0;
        a0 -= 1.0;
    }
    std::f64::consts::PI.sqrt() * factor * libm::tgamma(a0 + 0.5) / libm::tgamma(a0 + 1.0)
}

/// Squared weighted norms `λ_0, ..., λ_n`.
pub fn norms(n: usize, param: GegenbauerParam) -> Vec<f64> {
    let a = param.value();
    let mut lambda = Vec::with_capacity(n + 1);
    lambda.push(total_mass(param));
    if n >= 1 {
        lambda.push(lambda[0] / (2.0 * (1.0 + a)));
    }
    for k in 1..n {
        let kf = k as f64;
        let ratio = (kf + 1.0) * (kf + a) / ((kf + 1.0 + a) * (kf + 2.0 * a));
        lambda.push(lambda[k] * ratio);
    }
    lambda
}

/// Coefficient of `x^n` in `G_n^(α)`.
pub fn leading_coefficient(n: usize, a: f64) -> f64 {
    (1..n).fold(1.0, |k_n, k| {
        let kf = k as f64;
        k_n * 2.0 * (kf + a) / (kf + 2.0 * a)
    })
}

/// `2^m / K_{m+1}` as a running product, free of intermediate overflow.
fn power_over_leading(m: usize, a: f64) -> f64 {
    (1..=m).fold(1.0, |acc, k| {
        let kf = k as f64;
        acc * (kf + 2.0 * a) / (kf + a)
    })
}

/// `∫_{-1}^{x} G_k(t) dt` for `k = 0..=n`, by a Legendre–Gauss rule on `[-1, x]`
/// that is exact for degree `n`.
pub fn integrals_from_minus_one(n: usize, param: GegenbauerParam, x: f64) -> Vec<f64> {
    let rule = gauss::lg_rule_cached((n + 1).div_ceil(2));
    let half = 0.5 * (x + 1.0);
    let mut acc = vec![0.0; n + 1];
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        let s = half * t + 0.5 * (x - 1.0);
        for (a, g) in acc.iter_mut().zip(values_upto(n, param, s)) {
            *a += w * g;
        }
    }
    acc.iter_mut().for_each(|a| *a *= half);
    acc
}

/// `∫_{-1}^{x} G_n^(α)(t) dt`.
pub fn integrate_gegenbauer(spec: PolySpec, x: f64) -> f64 {
    spec.integral_from_minus_one(x)
}

/// Objective of the per-node parameter optimization:
/// `η(α) = 2^m / K_{m+1} · ∫_{-1}^{x_k} G_{m+1}(x) dx`.
pub fn eta(x_k: f64, m: usize, param: GegenbauerParam) -> Result<f64> {
    let scale = power_over_leading(m, param.value());
    let integral = PolySpec::new(m + 1, param).integral_from_minus_one(x_k);
    let value = scale * integral;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("eta"))
    }
}

/// Discrete Gegenbauer transform: `f̃_j = λ_j^{-1} Σ_k ϖ_k f(x_k) G_j(x_k)`.
pub fn discrete_gegenbauer_transform(rule: &QuadratureRule, values: &[f64]) -> Result<Vec<f64>> {
    if values.len() != rule.len() {
        return Err(Error::LengthMismatch {
            expected: rule.len(),
            got: values.len(),
        });
    }
    let param = match rule.kind() {
        RuleKind::Gegenbauer(p) => p,
        RuleKind::Legendre => GegenbauerParam::legendre(),
    };
    let n = rule.len() - 1;
    let lambda = norms(n, param);
    let mut coeffs = vec![0.0; n + 1];
    for ((&x, &w), &f) in rule.nodes().iter().zip(rule.weights()).zip(values) {
        for (c, g) in coeffs.iter_mut().zip(values_upto(n, param, x)) {
            *c += w * f * g;
        }
    }
    for (c, l) in coeffs.iter_mut().zip(&lambda) {
        *c /= l;
    }
    Ok(coeffs)
}

/// Inputs of the quadrature truncation-error bound.
#[derive(Debug, Clone, Copy)]
pub struct ErrorBoundInput {
    pub degree: usize,
    pub param: GegenbauerParam,
    pub x: f64,
    /// Bound `A` on `|f^(n+1)|` over `[-1, 1]`.
    pub derivative_bound: f64,
}

impl ErrorBoundInput {
    fn validate(&self) -> Result<()> {
        if !(-1.0..=1.0).contains(&self.x) {
            return Err(Error::InvalidInput(format!("x = {} outside [-1, 1]", self.x)));
        }
        if !(self.derivative_bound >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "derivative bound must be non-negative, got {}",
                self.derivative_bound
            )));
        }
        Ok(())
    }
}

/// Finite-`n` bound on the Gegenbauer quadrature truncation error at `x`.
///
/// The three branches are `α >= 0`, `-1/2 < α < 0` with `n` odd and
/// `-1/2 < α < 0` with `n` even. In the last two, `Γ(α)` resp. `Γ(α + 1)` in
/// the prefactor cancels against the denominator of the generalized binomial,
/// so only Gamma values at positive arguments are evaluated.
pub fn error_bound(input: &ErrorBoundInput) -> Result<f64> {
    input.validate()?;
    let n = input.degree as f64;
    let a = input.param.value();
    let scale = input.derivative_bound * (input.x + 1.0);
    if scale == 0.0 {
        return Ok(0.0);
    }
    let value = if a >= 0.0 {
        let lg = ln_gamma(a + 1.0) + ln_gamma(n + 2.0 * a + 1.0)
            - ln_gamma(2.0 * a + 1.0)
            - ln_gamma(n + 2.0)
            - ln_gamma(n + a + 1.0);
        scale * (-n * std::f64::consts::LN_2 + lg).exp()
    } else if input.degree % 2 == 1 {
        let lg = ln_gamma((n + 1.0) / 2.0 + a) - ln_gamma((n + 3.0) / 2.0) - ln_gamma(n + a + 1.0);
        scale * (-(n + 1.0) * std::f64::consts::LN_2 + lg).exp()
    } else {
        let lg = ln_gamma(n / 2.0 + a + 1.0) - ln_gamma(n / 2.0 + 1.0) - ln_gamma(n + a + 1.0);
        scale * (-n * std::f64::consts::LN_2 + lg).exp() / ((n + 1.0) * (2.0 * a + n + 1.0)).sqrt()
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("error bound"))
    }
}

/// Large-`n` form of the error bound with a caller-supplied constant `B`:
/// `B (e/2)^n (x + 1) n^(α - n - 3/2)` for `α >= 0`, and
/// `B (e/2)^n (x + 1) n^(-n - 3/2)` otherwise.
pub fn asymptotic_error_bound(input: &ErrorBoundInput, constant: f64) -> Result<f64> {
    input.validate()?;
    if input.degree == 0 {
        return Err(Error::InvalidInput("asymptotic bound needs n >= 1".into()));
    }
    let n = input.degree as f64;
    let a = input.param.value();
    let exponent = if a >= 0.0 { a - n - 1.5 } else { -n - 1.5 };
    let log_value = n * (1.0 - std::f64::consts::LN_2) + exponent * n.ln();
    Ok(constant * (input.x + 1.0) * log_value.exp())
}
