use thiserror::Error;

/// A collision between a mapped Legendre–Gauss node and an interpolation node.
///
/// `source` indexes the interpolation (column) node, `target` the integration
/// (row) node and `lg` the Legendre–Gauss node of the inner rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub source: usize,
    pub target: usize,
    pub lg: usize,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("Gegenbauer parameter must satisfy alpha > -1/2, got {0}")]
    InvalidParameter(f64),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("nodes {0} and {1} coincide")]
    DuplicateNodes(usize, usize),

    #[error("floating-point overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("Gauss rule with {0} nodes failed to converge")]
    RuleConvergence(usize),

    #[error(
        "infeasible integration matrix: {} collision(s), first at (i={}, j={}, k={})",
        .0.len(), .0[0].source, .0[0].target, .0[0].lg
    )]
    Infeasible(Vec<Collision>),

    #[error("singular linear system")]
    SingularSystem,

    #[error("Newton iteration stopped after {iterations} iterations with residual {residual:e}")]
    NewtonDivergence { iterations: usize, residual: f64 },
}

impl Error {
    /// Short structured name, used on stderr by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidInput(_) => "InvalidInput",
            Error::DuplicateNodes(..) => "DuplicateNodes",
            Error::Overflow(_) => "Overflow",
            Error::RuleConvergence(_) => "RuleConvergence",
            Error::Infeasible(_) => "Infeasible",
            Error::SingularSystem => "SingularSystem",
            Error::NewtonDivergence { .. } => "NewtonDivergence",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
