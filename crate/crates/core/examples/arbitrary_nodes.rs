//! Rectangular integration matrices for arbitrary integration points.

use bgim::gim::build_gim_arbitrary;
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let targets: Vec<f64> = (0..=8).map(|i| -1.0 + i as f64 / 4.0).collect();
    let p = build_gim_arbitrary(&targets, 16, GegenbauerParam::new(0.0)?)?;
    println!("{p}");
    let approx = p.integrate(|x| 1.0 / (2.0 + x));
    for (x, q) in targets.iter().zip(&approx) {
        let exact = (2.0 + x).ln();
        println!("  x = {x:+.2}: {q:.15}  error {:.1e}", (q - exact).abs());
    }
    Ok(())
}
