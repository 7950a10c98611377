//! Optimal integration matrices: per-row parameters, symmetric fast path and
//! the fixed-parameter fallback.

use bgim::gauss::gg_rule;
use bgim::optimal::{build_optimal_gim, build_optimal_gim_symmetric, OptimalConfig};
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let targets = gg_rule(8, GegenbauerParam::new(0.5)?)?.nodes().to_vec();
    let config = OptimalConfig::new(8);
    let general = build_optimal_gim(&targets, &config)?;
    let fast = build_optimal_gim_symmetric(&targets, &config)?;
    println!("{general}");
    println!("alpha*: {:.4?}", general.alpha_star());
    println!("fast path difference: {:.1e}", general.max_abs_diff(&fast));

    let f = |x: f64| (2.0 * x).exp();
    for (k, &x) in targets.iter().enumerate() {
        let exact = ((2.0 * x).exp() - (-2f64).exp()) / 2.0;
        println!("  row {k}: error {:.1e}", (general.integrate_row(k, f) - exact).abs());
    }

    let big = build_optimal_gim(&targets, &OptimalConfig::new(24))?;
    println!("m = 24 > m_max: alpha* = {:?}", &big.alpha_star()[..3]);

    print!("\n{}", build_optimal_gim(&[-0.5, 0.5], &OptimalConfig::new(3))?.to_csv());
    Ok(())
}
