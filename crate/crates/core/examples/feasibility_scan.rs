//! Where the plain construction breaks down and how the remedies recover.

use bgim::gim::{build_gim_gg, build_gim_gg_bumped, build_gim_gg_guarded, check_gg_condition};
use bgim::{Error, GegenbauerParam};

fn main() -> bgim::Result<()> {
    let eps = f64::EPSILON;
    let mut failures = Vec::new();
    for n in 1..=100 {
        for i in 0..=24 {
            let a = ((-0.4 + 0.1 * i as f64) * 1e10).round() / 1e10;
            if !check_gg_condition(n, GegenbauerParam::new(a)?, eps)?.feasible {
                failures.push((n, a));
            }
        }
    }
    println!("infeasible (n, alpha) on n = 1..100, alpha = -0.4:0.1:2: {failures:?}");

    let param = GegenbauerParam::new(1.0)?;
    match build_gim_gg(4, param) {
        Err(Error::Infeasible(c)) => println!("plain (4, 1): collisions {c:?}"),
        other => println!("plain (4, 1): unexpected {other:?}"),
    }
    let guarded = build_gim_gg_guarded(4, param, eps)?;
    let bumped = build_gim_gg_bumped(4, param, eps)?;
    println!("guarded and bumped agree to {:.1e}", guarded.max_abs_diff(&bumped));
    Ok(())
}
