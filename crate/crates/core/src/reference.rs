//! Adaptive Gauss–Kronrod (7, 15) integration and the benchmark integrands.
//!
//! The reference integrator uses tabulated constants only, so it shares no
//! code path with the Gegenbauer rules it is used to check.

use evalexpr::{build_operator_tree, ContextWithMutableVariables, DefaultNumericTypes, HashMapContext, Node, Value};

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
/// Gauss weights for the odd-indexed Kronrod abscissae, centre last.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_INTERVALS: usize = 4000;

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// `∫_a^b f` by globally adaptive bisection until the summed error estimate
/// is below `tol · max(1, |I|)`.
pub fn integrate_adaptive(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let (v, e) = gk15(&f, a, b);
    let mut parts = vec![(a, b, v, e)];
    loop {
        let total: f64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if err <= tol * total.abs().max(1.0) || parts.len() >= MAX_INTERVALS {
            return total;
        }
        let (idx, _) = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (lo, hi, _, _) = parts.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        for (l, h) in [(lo, mid), (mid, hi)] {
            let (v, e) = gk15(&f, l, h);
            parts.push((l, h, v, e));
        }
    }
}

/// Benchmark integrands.
#[derive(Debug, Clone)]
pub enum TestFunction {
    /// `x^20`
    F1,
    /// `exp(-x²)`
    F2,
    /// `1/(1 + 25x²)`
    F3,
    /// A user expression in the variable `x`.
    Expr { source: String, tree: Node<DefaultNumericTypes> },
}

impl TestFunction {
    /// Parses `f1`, `f2`, `f3` or `expr:<expression>`.
    pub fn parse(spec: &str) -> Result<Self> {
        match spec.trim() {
            "f1" => Ok(Self::F1),
            "f2" => Ok(Self::F2),
            "f3" => Ok(Self::F3),
            other => {
                let source = other
                    .strip_prefix("expr:")
                    .ok_or_else(|| Error::InvalidInput(format!("unknown function {other:?}")))?;
                let tree = build_operator_tree::<DefaultNumericTypes>(source)
                    .map_err(|e| Error::InvalidInput(format!("bad expression {source:?}: {e}")))?;
                let f = Self::Expr { source: source.to_string(), tree };
                f.try_eval(0.0)?;
                Ok(f)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::F1 => "f1".into(),
            Self::F2 => "f2".into(),
            Self::F3 => "f3".into(),
            Self::Expr { source, .. } => format!("expr:{source}"),
        }
    }

    pub fn try_eval(&self, x: f64) -> Result<f64> {
        match self {
            Self::F1 => Ok(x.powi(20)),
            Self::F2 => Ok((-x * x).exp()),
            Self::F3 => Ok(1.0 / (1.0 + 25.0 * x * x)),
            Self::Expr { source, tree } => {
                let mut ctx = HashMapContext::<DefaultNumericTypes>::new();
                ctx.set_value("x".into(), Value::Float(x))
                    .map_err(|e| Error::InvalidInput(e.to_string()))?;
                tree.eval_number_with_context(&ctx)
                    .map_err(|e| Error::InvalidInput(format!("evaluating {source:?} at {x}: {e}")))
            }
        }
    }

    /// Value at `x`; expression failures evaluate to NaN.
    pub fn eval(&self, x: f64) -> f64 {
        self.try_eval(x).unwrap_or(f64::NAN)
    }

    /// Reference value of `∫_{-1}^{x} f`.
    pub fn reference_integral(&self, x: f64) -> f64 {
        match self {
            Self::F1 => (x.powi(21) + 1.0) / 21.0,
            Self::F3 => ((5.0 * x).atan() + 5f64.atan()) / 5.0,
            _ => integrate_adaptive(|t| self.eval(t), -1.0, x, 1e-14),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_rule_is_exact_for_degree_22() {
        let (v, _) = gk15(&|x: f64| x.powi(22), -1.0, 1.0);
        assert!((v - 2.0 / 23.0).abs() < 1e-15);
    }

    #[test]
    fn adaptive_examples() {
        let v = integrate_adaptive(|x: f64| (-x * x).exp(), -1.0, 1.0, 1e-14);
        assert!((v - 1.493_648_265_624_854).abs() < 1e-14);
        let runge = integrate_adaptive(|x| 1.0 / (1.0 + 25.0 * x * x), -1.0, 0.3, 1e-14);
        assert!((runge - (1.5f64.atan() + 5f64.atan()) / 5.0).abs() < 1e-14);
        assert_eq!(integrate_adaptive(|x| x, 0.5, 0.5, 1e-14), 0.0);
    }

    #[test]
    fn function_parsing() {
        assert_eq!(TestFunction::parse("f2").unwrap().eval(0.0), 1.0);
        let e = TestFunction::parse("expr:math::sin(x) + x^2").unwrap();
        assert!((e.eval(0.5) - (0.5f64.sin() + 0.25)).abs() < 1e-15);
        assert!(TestFunction::parse("f9").is_err());
        assert!(TestFunction::parse("expr:(x").is_err());
        let f2 = TestFunction::F2;
        let num = integrate_adaptive(|x| f2.eval(x), -1.0, 0.2, 1e-14);
        assert!((f2.reference_integral(0.2) - num).abs() < 1e-15);
        let f3 = TestFunction::F3;
        let num = integrate_adaptive(|x| f3.eval(x), -1.0, 0.7, 1e-14);
        assert!((f3.reference_integral(0.7) - num).abs() < 1e-14);
    }
}
