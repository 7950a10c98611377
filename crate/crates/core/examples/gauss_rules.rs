//! Gegenbauer–Gauss and Legendre–Gauss rules and their CSV form.

use bgim::gauss::{gg_rule, lg_rule, QuadratureRule};
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let lg = lg_rule(4)?;
    println!("{lg}");
    print!("{}", lg.to_csv());

    // With α = 1 the nodes are cos(kπ/(n+2)).
    let gg = gg_rule(6, GegenbauerParam::new(1.0)?)?;
    println!("\nGG(6, 1) nodes vs cos(k pi / 8):");
    for (k, x) in gg.nodes().iter().rev().enumerate() {
        let c = ((k + 1) as f64 * std::f64::consts::PI / 8.0).cos();
        println!("  {x:+.16}  {c:+.16}");
    }

    // Weighted integral ∫ (1 - x²)^(α - 1/2) x^4 dx by the rule.
    for a in [-0.4, 0.0, 0.5, 2.0] {
        let rule = gg_rule(10, GegenbauerParam::new(a)?)?;
        println!("alpha = {a:>4}: sum of weights {:.15}, weighted x^4 moment {:.15}", rule.weights().iter().sum::<f64>(), rule.integrate(|x| x.powi(4)));
    }

    let back = QuadratureRule::from_csv(&lg.to_csv())?;
    assert_eq!(back, lg);
    println!("\nCSV round trip is exact");
    Ok(())
}
