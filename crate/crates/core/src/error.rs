use thiserror::Error;

/// Group axiom that a multiplication table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Associativity,
    Identity,
    Inverse,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Closure => "closure",
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{axiom} axiom violated at ({a}, {b}, {c})")]
    AxiomViolation {
        axiom: Axiom,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("multiplication table is malformed: {0}")]
    MalformedTable(String),

    #[error("unknown group name {0:?}")]
    UnknownGroupName(String),

    #[error("matrix for element {0} is not unitary")]
    NotUnitary(usize),

    #[error("U({g})U({h})U({g}{h})^† deviates from a phase times identity by {deviation:e}")]
    NotProjective { g: usize, h: usize, deviation: f64 },

    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("element index {index} out of range for group of order {order}")]
    InvalidElement { index: usize, order: usize },

    #[error("characteristic functions are defined over different groups")]
    GroupMismatch,

    #[error("symmetry set is not a subgroup (tolerances too loose or too tight)")]
    SymNotSubgroup,

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("requested rate is not below the optimal rate (s = {s})")]
    RateNotBelowOptimal { s: f64 },

    #[error("target characteristic function vanishes at element {0} where the source does not")]
    ZeroSetViolation(usize),

    #[error("Gram matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("group is not abelian")]
    NotAbelian,

    #[error("representation is not simultaneously diagonalizable (genuinely projective)")]
    NotSimultaneouslyDiagonalizable,

    #[error("distribution shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),

    #[error("invalid charge distribution: {0}")]
    InvalidDistribution(String),

    #[error("largest non-symmetric modulus is 1, no decay")]
    NoDecay,

    #[error("argument {0} outside the domain [0, 1)")]
    DomainError(f64),

    #[error("not a density matrix: {0}")]
    NotAState(String),

    #[error("generator {0} is not Hermitian")]
    NotHermitianGenerator(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable identifier used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::AxiomViolation { .. } => "AxiomViolation",
            Error::MalformedTable(_) => "MalformedTable",
            Error::UnknownGroupName(_) => "UnknownGroupName",
            Error::NotUnitary(_) => "NotUnitary",
            Error::NotProjective { .. } => "NotProjective",
            Error::NotNormalized(_) => "NotNormalized",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::GroupMismatch => "GroupMismatch",
            Error::SymNotSubgroup => "SymNotSubgroup",
            Error::NotASubgroup => "NotASubgroup",
            Error::RateNotBelowOptimal { .. } => "RateNotBelowOptimal",
            Error::ZeroSetViolation(_) => "ZeroSetViolation",
            Error::NotHermitian(_) => "NotHermitian",
            Error::NotAbelian => "NotAbelian",
            Error::NotSimultaneouslyDiagonalizable => "NotSimultaneouslyDiagonalizable",
            Error::ShapeMismatch(..) => "ShapeMismatch",
            Error::InvalidDistribution(_) => "InvalidDistribution",
            Error::NoDecay => "NoDecay",
            Error::DomainError(_) => "DomainError",
            Error::NotAState(_) => "NotAState",
            Error::NotHermitianGenerator(_) => "NotHermitianGenerator",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    /// True for errors caused by malformed or inconsistent input data, as opposed to
    /// domain outcomes of a well-posed computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::AxiomViolation { .. }
                | Error::MalformedTable(_)
                | Error::UnknownGroupName(_)
                | Error::NotUnitary(_)
                | Error::NotProjective { .. }
                | Error::NotNormalized(_)
                | Error::DimensionMismatch { .. }
                | Error::InvalidElement { .. }
                | Error::GroupMismatch
                | Error::ShapeMismatch(..)
                | Error::InvalidDistribution(_)
                | Error::NotAState(_)
                | Error::NotHermitianGenerator(_)
                | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
