//! Solves `y' - y - ∫_0^1 e^{sx} y(s) ds = (1 - e^{x+1})/(x+1)`, `y(0) = 1`
//! for a sweep of Gegenbauer parameters and prints the error and conditioning.

use bgim::optimal::OptimalConfig;
use bgim::solvers::solve_example1;
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let (n, m) = (10, 14);
    let config = OptimalConfig::new(m);
    println!("n = {n}, m = {m}");
    println!("{:>6} {:>12} {:>8}", "alpha", "MAE", "kappa2");
    for i in 0..=14 {
        let alpha = -0.4 + 0.1 * i as f64;
        let s = solve_example1(n, GegenbauerParam::new(alpha)?, &config)?;
        println!("{alpha:>6.1} {:>12.3e} {:>8.3}", s.mae, s.kappa2.unwrap_or(f64::NAN));
    }

    let best = solve_example1(n, GegenbauerParam::new(0.7)?, &config)?;
    println!("\nalpha = 0.7 nodal values:");
    for (x, w) in best.nodes.iter().zip(&best.values) {
        println!("  y({x:.6}) = {w:.16}  (exact {:.16})", x.exp());
    }
    Ok(())
}
