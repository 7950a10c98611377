//! Collocation solvers built on the integration matrices.

mod example1;
mod example2;
pub mod linalg;
pub mod newton;

pub use example1::{solve_example1, Example1System};
pub use example2::{solve_example2, Example2System};
pub use linalg::{condition_number_2, lu_solve, ConditionNumber};
pub use newton::{newton_solve, NewtonOptions, NewtonOutcome};

use crate::csv;
use crate::error::Result;

/// Approximate solution at the collocation nodes with its error metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct CollocationSolution {
    pub n: usize,
    /// Degree of the optimal quadrature, when one is used.
    pub m: Option<usize>,
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub values: Vec<f64>,
    pub exact: Vec<f64>,
    /// `max_i |u(x_i) - U_i|`
    pub mae: f64,
    /// Correct digits `-log10(mae)`; `inf` for an exact solution.
    pub cd: f64,
    /// 2-norm condition number of the linear system, if the problem is linear.
    pub kappa2: Option<f64>,
}

impl CollocationSolution {
    pub(crate) fn new(
        n: usize,
        m: Option<usize>,
        alpha: f64,
        nodes: Vec<f64>,
        values: Vec<f64>,
        exact_fn: impl Fn(f64) -> f64,
        kappa2: Option<f64>,
    ) -> Self {
        let exact: Vec<f64> = nodes.iter().map(|&x| exact_fn(x)).collect();
        let mae = values
            .iter()
            .zip(&exact)
            .map(|(u, e)| (u - e).abs())
            .fold(0.0, f64::max);
        Self {
            n,
            m,
            alpha,
            nodes,
            values,
            exact,
            mae,
            cd: -mae.log10(),
            kappa2,
        }
    }

    /// Metadata header and values, then `x,u_approx,u_exact,abs_error` rows.
    /// Absent fields are written as `NA`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,alpha,mae,cd,kappa2\n");
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            self.n,
            self.m.map_or("NA".to_string(), |m| m.to_string()),
            csv::fmt(self.alpha),
            csv::fmt(self.mae),
            csv::fmt(self.cd),
            self.kappa2.map_or("NA".to_string(), csv::fmt)
        ));
        out.push_str("x,u_approx,u_exact,abs_error\n");
        for ((x, u), e) in self.nodes.iter().zip(&self.values).zip(&self.exact) {
            out.push_str(&csv::join([*x, *u, *e, (u - e).abs()]));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        csv::expect_header(lines.next(), "n,m,alpha,mae,cd,kappa2")?;
        let meta = csv::fields(lines.next(), 6)?;
        let opt = |s: &str| -> Result<Option<f64>> {
            if s.trim() == "NA" {
                Ok(None)
            } else {
                csv::parse_f64(s).map(Some)
            }
        };
        let n = csv::parse_usize(meta[0])?;
        let m = if meta[1].trim() == "NA" { None } else { Some(csv::parse_usize(meta[1])?) };
        csv::expect_header(lines.next(), "x,u_approx,u_exact,abs_error")?;
        let (mut nodes, mut values, mut exact) = (Vec::new(), Vec::new(), Vec::new());
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let f = csv::fields(Some(line), 4)?;
            nodes.push(csv::parse_f64(f[0])?);
            values.push(csv::parse_f64(f[1])?);
            exact.push(csv::parse_f64(f[2])?);
        }
        Ok(Self {
            n,
            m,
            alpha: csv::parse_f64(meta[2])?,
            nodes,
            values,
            exact,
            mae: csv::parse_f64(meta[3])?,
            cd: csv::parse_f64(meta[4])?,
            kappa2: opt(meta[5])?,
        })
    }
}
