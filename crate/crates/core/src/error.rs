use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("linear map is singular")]
    SingularMap,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("invalid slot pattern: {0}")]
    Slot(String),
    #[error("algebra is not alternative")]
    NotAlternative,
    #[error("algebra is not pre-alternative")]
    NotPreAlternative,
    #[error("action does not define a bimodule")]
    BadBimodule,
    #[error("map is not an Al-operator")]
    NotAlOperator,
    #[error("form is not skew-symmetric")]
    NotSkew,
    #[error("form is not symplectic")]
    NotSymplectic,
    #[error("structure is not graded: {0}")]
    NotGraded(String),
    #[error("characteristic obstruction: {0}")]
    BadCharacteristic(String),
    #[error("tensor does not solve the equation")]
    NotSolution,
    #[error("tensor has the wrong symmetry: {0}")]
    WrongSymmetry(String),
    #[error("comultiplication does not dualize to the expected algebra")]
    NotCoalgebra,
    #[error("compatibility conditions between product and coproduct fail")]
    NotBialgebra,
    #[error("search space of {size} candidates exceeds the cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("unknown catalog entry: {0}")]
    UnknownName(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}
