use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("too many variables: {0} (at most {max})", max = crate::order::MAX_VARS)]
    TooManyVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("colon by zero ideal")]
    ColonByZero,
    #[error("infinite colength")]
    InfiniteColength,
    #[error("graded input required")]
    NotGraded,
    #[error("input not m-primary: {0}")]
    NotMPrimary(String),
    #[error("{element} is not in {ideal}")]
    NotMember { element: String, ideal: String },
    #[error("reduction number exceeds cap {0}")]
    ExceedsCap(usize),
    #[error("no reduction found in {0} trials")]
    NoReduction(usize),
    #[error("joint reduction not found in {0} trials")]
    NoJointReduction(usize),
    #[error("Q is not a reduction of I")]
    NotReduction,
    #[error("socle ideal Q:m has {0} minimal generators, expected 3")]
    SocleGenerators(usize),
    #[error("no socle generator outside Q")]
    SocleGeneratorMissing,
    #[error("c^2 is not in QI")]
    SquareNotInQI,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{0}")]
    CheckFailed(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

impl Error {
    /// Stable machine-readable code, surfaced by the command line tool.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Arity { .. } => "E_ARITY",
            Error::RingMismatch => "E_RING_MISMATCH",
            Error::TooManyVariables(_) => "E_TOO_MANY_VARIABLES",
            Error::DuplicateVariable(_) => "E_DUPLICATE_VARIABLE",
            Error::InvalidField(_) => "E_INVALID_FIELD",
            Error::ColonByZero => "E_COLON_BY_ZERO",
            Error::InfiniteColength => "E_INFINITE_COLENGTH",
            Error::NotGraded => "E_NOT_GRADED",
            Error::NotMPrimary(_) => "E_NOT_M_PRIMARY",
            Error::NotMember { .. } => "E_NOT_MEMBER",
            Error::ExceedsCap(_) => "E_EXCEEDS_CAP",
            Error::NoReduction(_) => "E_NO_REDUCTION",
            Error::NoJointReduction(_) => "E_NO_JOINT_REDUCTION",
            Error::NotReduction => "E_NOT_REDUCTION",
            Error::SocleGenerators(_) => "E_SOCLE_GENERATORS",
            Error::SocleGeneratorMissing => "E_SOCLE_GENERATOR_MISSING",
            Error::SquareNotInQI => "E_SQUARE_NOT_IN_QI",
            Error::ExponentOverflow => "E_EXPONENT_OVERFLOW",
            Error::CheckFailed(_) => "E_CHECK_FAILED",
            Error::Syntax { .. } => "E_SYNTAX",
            Error::UnknownVariable(_) => "E_UNKNOWN_VARIABLE",
        }
    }

    /// Whether the error reports input the user got wrong, as opposed to a
    /// failed mathematical check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable(_)
                | Error::InvalidField(_)
                | Error::TooManyVariables(_)
                | Error::DuplicateVariable(_)
                | Error::Arity { .. }
        )
    }
}
