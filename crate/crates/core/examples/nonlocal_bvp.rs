//! Solves the nonlocal problem `-c α(∫_0^1 u) u'' + u^5 = 0`, `u(0) = 1`,
//! `u(1) = √2/2` by Newton's method and reports correct digits.

use bgim::solvers::solve_example2;
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    println!("{:>6} {:>3} {:>12} {:>6}", "alpha", "n", "MAE", "cd");
    for n in [6, 7, 9] {
        for i in 0..=14 {
            let alpha = -0.4 + 0.1 * i as f64;
            let s = solve_example2(n, GegenbauerParam::new(alpha)?)?;
            println!("{alpha:>6.1} {n:>3} {:>12.3e} {:>6.2}", s.mae, s.cd);
        }
    }
    Ok(())
}
