//! Compares barycentric and basis quadratures against adaptive reference
//! integrals for the three standard test functions.

use bgim::benchmark::{run_benchmark, BenchmarkSpec};
use bgim::reference::TestFunction;

fn main() -> bgim::Result<()> {
    for (name, n) in [("f1", 20), ("f2", 20), ("f3", 80)] {
        let spec = BenchmarkSpec {
            integrand: TestFunction::parse(name)?,
            n_grid: vec![n],
            alpha_grid: vec![-0.25, 0.0, 0.5, 1.0, 2.0],
        };
        for &a in &spec.alpha_grid {
            let rows = run_benchmark(&BenchmarkSpec { alpha_grid: vec![a], ..spec.clone() })?;
            let max = |f: fn(&bgim::benchmark::BenchRow) -> f64| rows.iter().map(f).fold(0.0, f64::max);
            println!(
                "{name} n={n} alpha={a:>5}: max AE barycentric {:.2e}, basis {:.2e}",
                max(|r| r.err_bary),
                max(|r| r.err_basis)
            );
        }
    }
    Ok(())
}
