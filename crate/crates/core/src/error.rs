use thiserror::Error;

/// Errors raised by the algebra, the series machinery and the evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
    #[error("variable `{0}` has no binding")]
    UnboundVariable(String),
    #[error("variable `{0}` is not declared for this coefficient ring")]
    UndeclaredVariable(String),
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient `{0}` is not a rational number")]
    NonRationalCoefficient(String),
    #[error("letter {letter} does not belong to the {alphabet} alphabet")]
    AlphabetMismatch { letter: String, alphabet: String },
    #[error("Euler alphabet needs r >= 2, got {0}")]
    InvalidRootOrder(u32),
    #[error("compositions of 0 are not defined")]
    EmptyComposition,
    #[error("composition of weight {weight} cannot act on a word of length {len}")]
    WeightMismatch { weight: usize, len: usize },
    #[error("series truncated at order {order} cannot act on a word of length {len}")]
    SeriesTooShort { order: usize, len: usize },
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("series is not invertible: its leading coefficient is not a unit")]
    NotInvertible,
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("map does not send 1 to 1, so it has no convolution inverse")]
    NoConvolutionInverse,
    #[error("lambda series needs constant term 1 to be inverted")]
    NotUnitConstant,
    #[error("a power series can only be substituted into a lambda series without constant term")]
    NonzeroConstantTerm,
    #[error("lambda series need a common truncation order: {left} vs {right}")]
    LambdaOrderMismatch { left: usize, right: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{identity}` needs {what}")]
    MissingInput { identity: String, what: String },
    #[error("word {word} is not admissible: {reason}")]
    Inadmissible { word: String, reason: String },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
