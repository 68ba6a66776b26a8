use thiserror::Error;

/// Every failure the engine can report.
///
/// Most variants signal a violated precondition; a few (`NotSymmetric`,
/// `CancellationFailure`, `ExpressionsDisagree`, `ConventionViolation`)
/// indicate an internal inconsistency and should never fire on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("Laurent polynomial is not a polynomial in gamma = w^2 + w^-2: {0}")]
    NotSymmetric(String),
    #[error("series constant term is not invertible")]
    NonUnitLeading,
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("series is not reversible: {0}")]
    NotReversible(&'static str),
    #[error("degree bound exceeded: {0}")]
    DegreeOverflow(String),
    #[error("gamma = -2 is outside the model range")]
    GammaEqualsMinusTwo,
    #[error("leading-order cancellation failed at t^{0}")]
    CancellationFailure(usize),
    #[error("fixed-point iteration did not stabilise after {0} iterations")]
    NoStabilization(usize),
    #[error("per-order degree bound exceeded at t^{order}: degree {degree} > {bound}")]
    DegreeBoundExceeded { order: usize, degree: usize, bound: usize },
    #[error("the two expressions disagree at t^{0}")]
    ExpressionsDisagree(usize),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("even derivatives of theta vanish at zero (requested d = {0})")]
    EvenDerivativeAtZero(usize),
    #[error("derivative order {0} is not supported (max 3)")]
    DerivativeTooHigh(usize),
    #[error("labelling convention violated: {0}")]
    ConventionViolation(String),
    #[error("face {0} is not colourful")]
    NotColourful(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("incompatible route: {0}")]
    IncompatibleRoute(String),
    #[error("trigonometric prefactors do not match: {0}")]
    ParityMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
