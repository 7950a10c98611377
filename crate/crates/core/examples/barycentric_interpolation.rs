//! Barycentric interpolation on GG nodes with the stable closed-form weights.

use bgim::barycentric::{bary_weights_direct, bary_weights_gg};
use bgim::gauss::gg_rule;
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let rule = gg_rule(24, GegenbauerParam::new(0.3)?)?;
    let basis = bary_weights_gg(&rule);
    let direct = bary_weights_direct(rule.nodes())?;
    let ratio = direct.weights()[0] / basis.weights()[0];
    let spread = direct
        .weights()
        .iter()
        .zip(basis.weights())
        .map(|(d, s)| (d / s / ratio - 1.0).abs())
        .fold(0.0, f64::max);
    println!("stable vs product weights: common ratio {ratio:.3e}, max relative spread {spread:.1e}");

    let f = |x: f64| (3.0 * x).sin() / (1.0 + x * x);
    let samples: Vec<f64> = rule.nodes().iter().map(|&x| f(x)).collect();
    let mut worst: f64 = 0.0;
    for i in 0..=200 {
        let x = -1.0 + i as f64 / 100.0;
        worst = worst.max((basis.eval(&samples, x)? - f(x)).abs());
    }
    println!("max interpolation error of sin(3x)/(1+x^2) on 201 points: {worst:.2e}");

    let l = basis.cardinals(0.123);
    println!("Lagrange basis at 0.123 sums to {:.16}", l.iter().sum::<f64>());
    Ok(())
}
