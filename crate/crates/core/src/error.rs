//! Crate-wide error type.

use crate::extraction::StepRecord;
use crate::rational::Rational;

/// Errors produced by the calculus, the analysis layer and the extraction
/// pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The supplied breakpoints do not describe an orientation-preserving
    /// bijection of `[0, 1]`.
    #[error("not a PL bijection of [0,1]: {0}")]
    NotBijection(String),

    /// A point or an image left the required domain.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// The map does not carry every component of the given set to itself.
    #[error("the map does not preserve every component of the set")]
    NotInvariant,

    /// The given point is not an endpoint of the given interval.
    #[error("{point} is not an endpoint of ({lo}, {hi})")]
    EndpointMismatch {
        point: Box<Rational>,
        lo: Box<Rational>,
        hi: Box<Rational>,
    },

    /// Asked for the sign of an approach that does not happen.
    #[error("the map does not approach {0} inside the orbital")]
    DoesNotApproach(Box<Rational>),

    /// The given interval is not an orbital of the generating set.
    #[error("({lo}, {hi}) is not an orbital of the generating set")]
    NotAnOrbital { lo: Box<Rational>, hi: Box<Rational> },

    /// A word letter refers to a generator index that does not exist.
    #[error("word refers to generator g{0} but only {1} generators are present")]
    IndexOutOfRange(usize, usize),

    /// A breadth-first word search exhausted its length bound.
    #[error("no word of length at most {0} achieves the goal")]
    NotFound(usize),

    /// No element approaching exactly one end of an orbital was found within
    /// the search bound. This is not a proof that none exists.
    #[error("one-sided approach hypothesis not verified at search depth {0}")]
    HypothesisNotVerified(usize),

    /// A named precondition of an extraction operation failed.
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),

    /// The conjugate-replacement search ran out of depth while violations
    /// remained.
    #[error("conjugate search exhausted at depth {0} with violations remaining")]
    SearchExhausted(usize),

    /// An orbital profile disagreed with what the pipeline guarantees. This
    /// signals a defect in the implementation, not bad input; the records
    /// accumulated so far are attached for inspection.
    #[error("pipeline invariant violated at step {step}: {message}")]
    InvariantViolated {
        step: u8,
        message: String,
        steps: Vec<StepRecord>,
    },

    /// A coordinate that must be dyadic is not.
    #[error("{0} is not a dyadic rational")]
    NotDyadic(Box<Rational>),

    /// Interval endpoints do not satisfy `0 < a < b < 1`.
    #[error("endpoints must satisfy 0 < a < b < 1")]
    BadOrder,
}

pub type Result<T> = std::result::Result<T, Error>;
