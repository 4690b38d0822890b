//! Crate-wide error type. Validation errors carry the first violated law
//! together with witness elements, so failures are reportable and debuggable.

use thiserror::Error;

/// Every failure the library can produce. Witness indices refer to the
/// structure the failing operation was given.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // ----- lattice validation -----
    #[error("join table entry out of range at [{row}][{col}]: {value}")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("join is not commutative at ({0}, {1})")]
    NonCommutativeJoin(usize, usize),
    #[error("join is not associative at ({0}, {1}, {2})")]
    NonAssociativeJoin(usize, usize, usize),
    #[error("join is not idempotent at {0}")]
    NonIdempotent(usize),
    #[error("no bottom element")]
    NoBottom,
    #[error("no top element")]
    NoTop,

    // ----- quantale validation -----
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("multiplication does not left-distribute over join at ({0}, {1}, {2})")]
    NotLeftDistributive(usize, usize, usize),
    #[error("multiplication does not right-distribute over join at ({0}, {1}, {2})")]
    NotRightDistributive(usize, usize, usize),
    #[error("bottom is not absorbed by multiplication at {0}")]
    BottomNotAbsorbed(usize),
    #[error("involution is not of period two at {0}")]
    StarNotInvolutive(usize),
    #[error("involution does not reverse products at ({0}, {1})")]
    StarNotAntihomomorphic(usize, usize),
    #[error("involution does not preserve joins at ({0}, {1})")]
    StarNotJoinPreserving(usize, usize),
    #[error("operation requires an involution but the quantale has none")]
    StarMissing,

    // ----- module validation -----
    #[error("module action is not associative at (a={0}, b={1}, x={2})")]
    NotActionAssociative(usize, usize, usize),
    #[error("action does not distribute over module joins at (a={0}, x={1}, y={2})")]
    NotJoinDistributiveModuleArg(usize, usize, usize),
    #[error("action does not distribute over quantale joins at (a={0}, b={1}, x={2})")]
    NotJoinDistributiveQuantaleArg(usize, usize, usize),
    #[error("module bottom is not absorbed ({0})")]
    ModuleBottomNotAbsorbed(String),

    // ----- congruences and quotients -----
    #[error("partition is not a congruence: {0}")]
    IncompatibleCongruence(String),
    #[error("order {n} exceeds the size guard {max} (set QLAB_MAX_ORDER to raise)")]
    SizeLimitExceeded { n: usize, max: usize },

    // ----- spectra -----
    #[error("{0} is not a two-sided prime")]
    NotTwoSidedPrime(usize),
    #[error("top is prime only vacuously and generates no cyclic set")]
    TopPrimeRejected,
    #[error("the given set is not cyclic")]
    NotCyclic,
    #[error("the congruence does not have a simple quotient")]
    QuotientNotSimple,
    #[error("the module is not simple")]
    NotSimpleModule,
    #[error("element {0} is not in the given set")]
    ElementNotInSet(usize),
    #[error("S is not closed under multiplication: {0}*{1} lands outside S")]
    NotSubsemigroup(usize, usize),
    #[error("S does not contain bottom")]
    BottomNotInS,

    // ----- constructions -----
    #[error("bad parameters: {0}")]
    BadParameters(String),

    // ----- files -----
    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
