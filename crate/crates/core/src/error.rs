use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at nonpositive integer {0}")]
    PoleAtNonpositiveInteger(Complex64),

    #[error("hypergeometric parameter c = {0} is a blocking nonpositive integer")]
    ParameterPole(Complex64),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("prefactor pole: {0}")]
    PrefactorPole(String),

    #[error("argument outside domain: {0}")]
    DomainError(String),

    #[error("parameters do not match the closed-form template: {0}")]
    TemplateMismatch(String),

    #[error("recurrence coefficient vanishes: {0}")]
    CoefficientVanishes(String),

    #[error("degenerate recombination: {0}")]
    DegenerateCombination(String),

    #[error("shifted argument {0} lies on the cut [-1, 1]")]
    ShiftedArgumentOnCut(Complex64),

    #[error("group parameter |u| = {u_abs} outside convergence radius {radius}")]
    RadiusViolation { u_abs: f64, radius: f64 },

    #[error("coefficient pole at term {0}")]
    CoefficientPole(usize),

    #[error("Weyl tail not converged: last integrand magnitude {0:e}")]
    TailNotConverged(f64),

    #[error("contour collapse invalid: {0}")]
    CollapseInvalid(String),

    #[error("convergence condition violated: {0}")]
    ConvergenceConditionViolated(String),

    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    #[error("no Riemann-type representation: {0}")]
    NoRiemannRepresentation(String),

    #[error("parameters rejected by domain of `{id}`: {reason}")]
    DomainRejected { id: String, reason: String },

    #[error("`{id}` failed upstream: {source}")]
    UpstreamFailure { id: String, source: Box<Error> },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
