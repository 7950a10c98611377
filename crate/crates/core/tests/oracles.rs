//! Independent checks of the polynomial and quadrature layers.

use bgim::gauss::{gg_rule, lg_rule};
use bgim::poly::{self, PolySpec};
use bgim::GegenbauerParam;
use statrs::function::beta::beta;

fn p(a: f64) -> GegenbauerParam {
    GegenbauerParam::new(a).unwrap()
}

/// Composite Simpson on `[a, b]` with `2k` panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, k: usize) -> f64 {
    let n = 2 * k;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

#[test]
fn norms_match_angular_quadrature() {
    // ∫ G_n² (1 - x²)^(α - 1/2) dx = ∫_0^π G_n(cos θ)² sin^(2α) θ dθ
    for &a in &[0.5, 1.0, 1.5, 2.0, 3.0] {
        let lambda = poly::norms(10, p(a));
        for n in 0..=10 {
            let spec = PolySpec::new(n, p(a));
            let num = simpson(|t| spec.eval(t.cos()).powi(2) * t.sin().powf(2.0 * a), 0.0, std::f64::consts::PI, 4000);
            assert!((lambda[n] / num - 1.0).abs() < 1e-10, "a={a} n={n}: {} vs {num}", lambda[n]);
        }
    }
}

#[test]
fn total_mass_is_a_beta_function() {
    for &a in &[-0.45, -0.25, 0.0, 0.3, 0.5, 1.0, 2.0, 7.5] {
        let b = beta(0.5, a + 0.5);
        assert!((poly::total_mass(p(a)) / b - 1.0).abs() < 1e-13, "a={a}");
    }
}

#[test]
fn leading_coefficient_from_divided_differences() {
    for &a in &[-0.3, 0.0, 0.5, 1.2] {
        for n in 1..=10 {
            let spec = PolySpec::new(n, p(a));
            let xs: Vec<f64> = (0..=n).map(|k| ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * n + 2) as f64).cos()).collect();
            let mut dd: Vec<f64> = xs.iter().map(|&x| spec.eval(x)).collect();
            for level in 1..=n {
                for i in (level..=n).rev() {
                    dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
                }
            }
            let k = poly::leading_coefficient(n, a);
            assert!((dd[n] / k - 1.0).abs() < 1e-9, "a={a} n={n}: {} vs {k}", dd[n]);
        }
    }
}

#[test]
fn chebyshev_and_second_kind_nodes() {
    for n in [3usize, 8, 17] {
        let r0 = gg_rule(n, p(0.0)).unwrap();
        let r1 = gg_rule(n, p(1.0)).unwrap();
        for k in 0..=n {
            let t = ((2 * (n - k) + 1) as f64 * std::f64::consts::PI / (2 * n + 2) as f64).cos();
            let u = ((n + 1 - k) as f64 * std::f64::consts::PI / (n + 2) as f64).cos();
            assert!((r0.nodes()[k] - t).abs() <= 4.0 * f64::EPSILON);
            assert!((r1.nodes()[k] - u).abs() <= 4.0 * f64::EPSILON);
            assert!((r0.weights()[k] - std::f64::consts::PI / (n + 1) as f64).abs() < 1e-14);
        }
    }
}

#[test]
fn gauss_rules_reproduce_beta_moments() {
    for &a in &[-0.4, -0.1, 0.0, 0.5, 1.3, 2.0] {
        for n in [2usize, 7, 15, 30] {
            let rule = gg_rule(n, p(a)).unwrap();
            for k in 0..=n {
                // exact up to degree 2n + 1
                let moment = beta(k as f64 + 0.5, a + 0.5);
                let got = rule.integrate(|x| x.powi(2 * k as i32));
                assert!((got - moment).abs() <= 1e-13 * moment.max(1.0) * (n as f64), "a={a} n={n} k={k}");
            }
        }
    }
}

#[test]
fn legendre_weights_match_closed_form() {
    // ϖ_k = 2 / ((1 - x²) P'_{N+1}(x)²)
    for big_n in [1usize, 4, 9, 20] {
        let rule = lg_rule(big_n).unwrap();
        let param = GegenbauerParam::legendre();
        for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
            let (_, d) = poly::value_and_derivative(big_n + 1, param, x);
            let expected = 2.0 / ((1.0 - x * x) * d * d);
            assert!((w / expected - 1.0).abs() < 1e-13);
        }
    }
}
