use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension guard exceeded: {what} = {value} > cap {cap}")]
    DimGuard {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("point budget exceeded while summing lattice sets ({points} > {budget})")]
    PointBudget { points: usize, budget: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("vector mixes several h-weights")]
    MixedWeights,
    #[error("monomial annihilates the highest weight vector")]
    ZeroAction,
    #[error("initial part of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("weighting is interior, no boundary certificates to emit")]
    InteriorWeighting,
    #[error("weight has support outside the requested variable subset")]
    SupportOutsideSubset,
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
