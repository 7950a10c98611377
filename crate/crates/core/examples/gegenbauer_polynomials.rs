//! Gegenbauer polynomials with `G_n(1) = 1`: values, norms, leading
//! coefficients, the discrete transform and the quadrature error bound.

use bgim::gauss::gg_rule;
use bgim::poly::{self, ErrorBoundInput, PolySpec};
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let param = GegenbauerParam::new(0.25)?;

    println!("G_n^(0.25)(0.3) for n = 0..6:");
    for n in 0..=6 {
        let spec = PolySpec::new(n, param);
        let nl = spec.norm_leading();
        println!(
            "  n = {n}: G = {:+.12}, lambda = {:.6e}, K = {:.6}, int_(-1)^0.3 = {:+.6e}",
            spec.eval(0.3),
            nl.norm,
            nl.leading,
            spec.integral_from_minus_one(0.3)
        );
    }

    // Transform of a degree-3 polynomial on a 6-point rule recovers it exactly.
    let rule = gg_rule(5, param)?;
    let samples: Vec<f64> = rule.nodes().iter().map(|x| x * x * x - 0.5 * x).collect();
    let coeffs = poly::discrete_gegenbauer_transform(&rule, &samples)?;
    let shown: Vec<String> = coeffs.iter().map(|c| format!("{c:+.3e}")).collect();
    println!("\nGegenbauer coefficients of x^3 - x/2: {}", shown.join(" "));
    let x = 0.7;
    let resum: f64 = poly::values_upto(5, param, x).iter().zip(&coeffs).map(|(g, c)| g * c).sum();
    println!("resummed at {x}: {resum:.15} (direct {:.15})", x * x * x - 0.5 * x);

    println!("\nerror bound for |f^(n+1)| <= 1 at x = 0.5:");
    for n in [4, 8, 16, 32] {
        for a in [-0.25, 0.0, 0.5, 1.0] {
            let input = ErrorBoundInput {
                degree: n,
                param: GegenbauerParam::new(a)?,
                x: 0.5,
                derivative_bound: 1.0,
            };
            print!("  n={n:>2} a={a:>5}: {:.3e}", poly::error_bound(&input)?);
        }
        println!();
    }
    Ok(())
}
