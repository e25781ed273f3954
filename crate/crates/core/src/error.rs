use thiserror::Error;

use crate::algebra::MonPrime;
use crate::monomial::Polynomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("too many variables: {0} (at most {max})", max = crate::MAX_VARS)]
    TooManyVariables(usize),
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the constructible set is empty")]
    EmptySet,
    #[error("q = {q} out of range for a product of {len} factors")]
    QOutOfRange { q: usize, len: usize },
    #[error("the zero ideal has no primary decomposition here")]
    ZeroIdeal,
    #[error("the ideal or module is not proper")]
    NotProper,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("annihilator is not monomially generated; it contains {}", show(witness))]
    NonMonomialAnnihilator { witness: Vec<Polynomial> },
    #[error("annihilator of the component at {prime} is not monomially generated; it contains {}", show(witness))]
    ComponentAnnihilator { prime: MonPrime, witness: Vec<Polynomial> },
    #[error("annihilator of the current does not equal the given module: {detail}")]
    DualityMismatch { detail: String },
    #[error("the zero prime is associated; only positive codimension is supported")]
    ZeroPrimeAssociated,
    #[error("{0} is not an associated prime")]
    NotAssociated(MonPrime),
    #[error("the tuple is not a complete intersection")]
    NotCompleteIntersection,
}

fn show(w: &[Polynomial]) -> String {
    let parts: Vec<String> = w.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join("; "))
}
