use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("symmetric group S{0} is not supported (1 <= k <= 6)")]
    SymmetricTooLarge(usize),
    #[error("multiplication table is not square: expected {expected} entries, found {found}")]
    TableNotSquare { expected: usize, found: usize },
    #[error("multiplication table is not a Latin square ({0})")]
    NotLatinSquare(String),
    #[error("multiplication table has no identity element")]
    NoIdentity,
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("subset {0} is empty")]
    EmptySubset(usize),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("i/o error reading {path}: {message}")]
    Io { path: String, message: String },

    #[error("cardinalities must be positive (index {0})")]
    ZeroCardinality(usize),
    #[error("integer overflow while building a generic family")]
    Overflow,
    #[error("subset {index} collapses modulo {modulus}")]
    Collapse { index: usize, modulus: u64 },
    #[error("work budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("size guard: {what} = {value} exceeds the limit {limit}")]
    SizeGuard { what: &'static str, value: usize, limit: usize },
    #[error("the subset-sum genericity test needs an abelian group")]
    NotAbelian,
    #[error("closed form requires a generic family with at least two subsets")]
    NotGenericOrTooSmall,
    #[error("invalid hyperedge {0:?}")]
    InvalidHyperedge(Vec<usize>),
    #[error("the hyperedges do not form a hyperforest")]
    NotAHyperforest,

    #[error("linear system is singular")]
    Singular,
    #[error("{0} is not a prime <= 97")]
    NotAPrime(u64),
    #[error("denominator of alpha_{index} is not invertible modulo {p}")]
    NonInvertible { index: usize, p: u64 },
    #[error("period not found within {0} terms")]
    PeriodUndetermined(usize),
    #[error("too few known alpha values for p = {0}")]
    TooFewAlphas(u64),
    #[error("precision {0} is not usable")]
    Precision(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
