//! Shared error type for the whole engine.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("polynomials belong to different variable contexts")]
    ContextMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero in F_{0}: denominator is a multiple of the modulus")]
    ZeroModulusDivision(u64),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("no image supplied for variable `{0}`")]
    MissingImage(String),
    #[error("monomial involves variables outside the designated block")]
    NonBlockMonomial,
    #[error("zero polynomial among the generators")]
    ZeroGenerator,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("division requires every leading term to be a pure leading-block monomial with unit coefficient")]
    NonUnitLeadingTerm,
    #[error("the basis is not certified by the Buchberger criterion")]
    Uncertified,
    #[error("quotient is infinite-dimensional: no pure power of `{0}` among the leading monomials")]
    InfiniteDimensional(String),
    #[error("operation requires a local monomial quotient (every variable nilpotent)")]
    NotLocalMonomial,
    #[error("element is not nilpotent (nonzero unit coordinate)")]
    NotNilpotent,
    #[error("field characteristic divides {0}; series coefficient is undefined")]
    CharacteristicTooSmall(u64),
    #[error("normal form of the monomial is not a unit multiple of a basis monomial")]
    AmbiguousMonomialClass,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the zero functional defines no hyperplane")]
    ZeroFunctional,
    #[error("functional is not complementary: it vanishes on the socle")]
    NotComplementary,
    #[error("kernel of the functional does not generate the algebra")]
    NotGenerating,
    #[error("dimension {dim} exceeds the configured bound {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("runtime budget of {0} s exceeded")]
    BudgetExceeded(u64),
    #[error("point does not lie in the kernel of the functional")]
    NotInKernel,
    #[error("coefficient overflow in the sparse eliminator")]
    Overflow,
    #[error("invalid JSON polynomial: {0}")]
    InvalidJson(String),
    #[error("invalid ideal file: {0}")]
    InvalidIdealFile(String),
}
