use crate::colorings::ColorScheme;
use crate::comp::RestrictedFamily;
use crate::words::WordConstraint;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by constructors and bijections.
///
/// Every map validates its domain; a value that passes construction is safe
/// to feed to any operation whose precondition it meets.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("composition must have at least one part")]
    EmptyComposition,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("part {part} is not allowed in the {family} family")]
    PartOutsideFamily { part: usize, family: RestrictedFamily },
    #[error("expected a colored composition under scheme {expected}, got {got}")]
    SchemeMismatch { expected: ColorScheme, got: ColorScheme },
    #[error("scheme {0} has no word codec")]
    NoWordCodec(ColorScheme),
    #[error("invalid board: {0}")]
    InvalidBoard(String),
    #[error("invalid color payload: {0}")]
    InvalidColor(String),
    #[error("constraint {constraint} needs an alphabet of size {expected}, word has {got}")]
    AlphabetMismatch {
        constraint: WordConstraint,
        expected: u8,
        got: u8,
    },
    #[error("letter {letter} at index {index} exceeds alphabet size {alphabet}")]
    LetterOutOfRange { letter: u8, index: usize, alphabet: u8 },
    #[error("word violates {constraint} at index {index}")]
    ConstraintViolation { constraint: WordConstraint, index: usize },
    #[error("composition of {n} is too small for this map (needs n >= {min})")]
    TooSmall { n: usize, min: usize },
    #[error("expected the last part to be {expected}, found {found}")]
    BadLastPart { expected: &'static str, found: usize },
    #[error("edge {0} is out of range for a ladder of length {1}")]
    EdgeOutOfRange(String, usize),
    #[error("edge set is not a spanning tree of the ladder")]
    NotSpanningTree,
    #[error("brute-force enumeration of {what} is capped at n = {cap}, got n = {n}")]
    OracleScale {
        what: &'static str,
        cap: usize,
        n: usize,
    },
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not noncrossing, nonnesting, and indecomposable")]
    NotNcnIndecomposable,
    #[error("partition is not totally nested")]
    NotTotallyNested,
    #[error("invalid unimodal sequence: {0}")]
    InvalidUnimodal(String),
    #[error("sequence admits no decomposition into nested components")]
    NoPeel,
    #[error("ambiguous peel while decomposing a unimodal sequence: {0}")]
    AmbiguousPeel(String),
    #[error("invalid comma-slash string: {0}")]
    InvalidCommaSlash(String),
    #[error("invalid ordered partition sequence: {0}")]
    InvalidOcps(String),
    #[error("invalid 2-composition: {0}")]
    InvalidTwoComposition(String),
    #[error("series denominator has a zero constant term")]
    ZeroConstantTerm,
    #[error("series has a nonzero constant coefficient")]
    NonzeroConstantTerm,
    #[error("series coefficient at index {0} is not an integer")]
    NonIntegerCoefficient(usize),
    #[error("coefficient sequence must be nonempty")]
    EmptySeries,
}
