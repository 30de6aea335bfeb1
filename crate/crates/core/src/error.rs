use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("relation {0} is not homogeneous")]
    NonHomogeneousRelation(usize),

    #[error("expected an element of degree {expected}, found degree {found}")]
    MixedDegree { expected: usize, found: usize },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("subspaces live in different ambient pieces ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("the two inputs are defined over different rings")]
    RingMismatch,

    #[error("weight vector has {found} entries, the ring has {expected} variables")]
    WeightLength { expected: usize, found: usize },

    #[error("generator {0} has t-power 0; the Rees algebra would meet R outside the constants")]
    DegreeZeroGenerator(usize),

    #[error("generator {0} vanishes in the quotient ring or has degree 0")]
    DegenerateGenerator(usize),

    #[error("flag in degree {0} never reaches the full piece below the i-bound")]
    NotExhaustiveWithinBound(usize),

    #[error("relation {0} is not weight-homogeneous for the action")]
    IdealNotPreserved(usize),

    #[error("degree {requested} exceeds the tabulated bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("sequence is not yet polynomial: first mismatch at k = {0}")]
    NotYetPolynomial(usize),

    #[error("fit window too short: need kmax - k0 >= {needed}, have {have}")]
    WindowTooShort { needed: usize, have: usize },

    #[error("weight functions are not certified polynomial up to the tabulated degree")]
    UncertifiedFit,

    #[error("torus cocharacters are linearly dependent")]
    DegenerateTorus,

    #[error("filtration is not equivariant for the torus")]
    NotEquivariant,

    #[error("a filtration has zero L2 norm; the distance formula does not apply")]
    ZeroNorm,

    #[error("no approximation exponent r <= {kmax} reproduces the weight functions (first disagreement at k = {disagreement})")]
    ApproximationUnstable { kmax: usize, disagreement: usize },

    #[error("out of bounds: {0}")]
    OutOfBounds(String),

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}
