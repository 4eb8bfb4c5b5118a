use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the cap of {0} elements")]
    OrderCapExceeded(usize),
    #[error("incompatible generators: {0}")]
    IncompatibleGenerators(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),
    #[error("{0} is not a valid prime for this construction")]
    NotValidPrime(u64),
    #[error("invalid central identification: {0}")]
    InvalidPhi(String),
    #[error("generator {0} is singular modulo p")]
    SingularGenerator(usize),
    #[error("group is abelian, its commuting graph has no vertices")]
    EmptyGraph,
    #[error("element {0} is central and is not a vertex")]
    CentralVertex(usize),
    #[error("no involution commutes with element {0}")]
    NoWitness(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
