//! Square integration matrices on GG nodes: plain, guarded, bumped and basis
//! forms, higher-order matrices and the map to `[0, 1]`.

use bgim::gim::{self, build_basis_gim, build_gim_gg};
use bgim::GegenbauerParam;

fn main() -> bgim::Result<()> {
    let param = GegenbauerParam::new(0.5)?;
    let n = 12;
    let p = build_gim_gg(n, param)?;
    println!("{p}");

    let approx = p.integrate(f64::cos);
    let err = p
        .target_nodes()
        .iter()
        .zip(&approx)
        .map(|(&x, q)| (q - (x.sin() + 1f64.sin())).abs())
        .fold(0.0, f64::max);
    println!("max error of int_(-1)^x cos: {err:.2e}");

    let basis = build_basis_gim(n, param)?;
    let guarded = gim::build_gim_gg_guarded(n, param, f64::EPSILON)?;
    let bumped = gim::build_gim_gg_bumped(n, param, f64::EPSILON)?;
    println!(
        "differences to the basis form: plain {:.1e}, guarded {:.1e}, bumped {:.1e}",
        p.max_abs_diff(&basis),
        guarded.max_abs_diff(&basis),
        bumped.max_abs_diff(&basis)
    );

    // Second order: ∫_{-1}^{x} (x - t) e^t dt = e^x - (x + 2)/e.
    let p2 = p.qth_order(2)?;
    let approx = p2.integrate(f64::exp);
    let err = p2
        .target_nodes()
        .iter()
        .zip(&approx)
        .map(|(&x, q)| (q - (x.exp() - (x + 2.0) / 1f64.exp())).abs())
        .fold(0.0, f64::max);
    println!("max error of the second-order integral of e^t: {err:.2e}");

    let unit = p.to_unit_interval();
    let ones = unit.integrate(|_| 1.0);
    println!("on [0, 1]: first row integrates 1 to {:.16} at y = {:.16}", ones[0], unit.target_nodes()[0]);

    let row = gim::row_gim_endpoint(n, param)?;
    let total: f64 = row.iter().zip(p.source_nodes()).map(|(w, &x)| w * x.exp()).sum();
    println!("endpoint row: int_(-1)^1 e^x = {total:.16} (exact {:.16})", 1f64.exp() - (-1f64).exp());

    print!("\nCSV of the 3x3 matrix:\n{}", build_gim_gg(2, param)?.to_csv());
    Ok(())
}
