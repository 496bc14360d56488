use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("DegenerateMetric: Gram matrix is not symmetric positive definite")]
    DegenerateMetric,
    #[error("InexactFrame: orthonormal frame needs square roots unavailable on the exact path")]
    InexactFrame,
    #[error("NotHomomorphism: bracket compatibility residual {residual}")]
    NotHomomorphism { residual: f64 },
    #[error("NotAutomorphism: conjugating map is not a bracket-preserving bijection")]
    NotAutomorphism,
    #[error("Singular: matrix is not invertible")]
    Singular,
    #[error("ParamOutOfRange: {family} parameter {param} violates {constraint}")]
    ParamOutOfRange {
        family: String,
        param: String,
        constraint: String,
    },
    #[error("MissingParam: {family} requires parameter {param}")]
    MissingParam { family: String, param: String },
    #[error("UnknownFamily: {0}")]
    UnknownFamily(String),
    #[error("UnknownAlgebra: {0}")]
    UnknownAlgebra(String),
    #[error("UnknownCase: {0}")]
    UnknownCase(String),
    #[error("SamplingInfeasible: case {0} produced no admissible samples")]
    SamplingInfeasible(String),
    #[error("NoFreeParams: search spec declares no free parameters")]
    NoFreeParams,
    #[error("AlgebraMismatch: homomorphism endpoints do not match the metric Lie algebras")]
    AlgebraMismatch,
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
