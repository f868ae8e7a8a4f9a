use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field modulus {0} is out of range (must be in 2..=2^31)")]
    ModulusOutOfRange(u64),
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("operands belong to different fields (GF({left}) vs GF({right}))")]
    FieldMismatch { left: u32, right: u32 },
    #[error("residue {value} is not reduced modulo {q}")]
    ResidueOutOfRange { value: u64, q: u32 },
    #[error("duplicate interpolation node x = {0}")]
    DuplicateNode(u32),
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("message of degree {degree} does not fit a code of dimension {k}")]
    MessageTooLong { degree: usize, k: usize },
    #[error("cannot puncture an [{n}, {k}] code any further")]
    CannotPuncture { n: usize, k: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("exhaustive search over {q}^{k} messages exceeds the budget of {budget}")]
    BudgetExceeded { q: u32, k: usize, budget: u64 },
    #[error("no interpolation multiplicity up to {cap} reaches radius {tau} for n = {n}, k = {k}")]
    MultiplicityOverflow { n: usize, k: usize, tau: usize, cap: u32 },
    #[error("rate-1 decoding needs n = k (got n = {n}, k = {k})")]
    NotRateOne { n: usize, k: usize },
    #[error("decoding radius {tau} exceeds the Guruswami–Sudan radius {max} for n = {n}, k = {k}")]
    RadiusTooLarge { n: usize, k: usize, tau: usize, max: usize },
}
