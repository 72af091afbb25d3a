use thiserror::Error;

/// Failures raised anywhere in the duality pipeline.
///
/// Mathematical check failures that are expected outcomes (an axiom that
/// does not hold, a non-reflexive algebra) are reported through report
/// structs instead; the variants here abort the computation that raised them.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),
    #[error("iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("linear system is rank deficient (residual {0:.3e})")]
    RankDeficient(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("could not split algebra into simple blocks: {0}")]
    SplitFailure(String),
    #[error("subspace is not a two-sided ideal (residual {0:.3e})")]
    NotAnIdeal(f64),
    #[error("representation is not standard (residual {0:.3e})")]
    NotStandard(f64),
    #[error("representation is degenerate")]
    DegenerateRep,
    #[error("representations belong to different predual algebras")]
    MixedParents,
    #[error("linear extension is inconsistent: {0}")]
    ExtensionInconsistent(String),
    #[error("algebra is not commutative (residual {0:.3e})")]
    NotCommutative(f64),
    #[error("reconstructed structure is not a group: {0}")]
    NotAGroup(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("bad input specification: {0}")]
    BadSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
