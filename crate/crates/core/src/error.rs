use thiserror::Error;

/// Errors raised by the geometric and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tower depth exceeded: at most {max} square roots may be adjoined")]
    TowerDepthExceeded { max: usize },
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(String),
    #[error("square root of a non-rational, non-square element is outside the supported towers")]
    NonRationalRadicand,
    #[error("points do not span a line")]
    DegenerateSpan,
    #[error("lines {0} and {1} are not skew")]
    NotSkew(usize, usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("the lines have two common transversals")]
    AmbiguousTransversal,
    #[error("line {0} does not meet the axis")]
    NotIncident(usize),
    #[error("point {0} does not lie on the carrier line")]
    NotOnLine(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("three of the points are collinear; the conic is degenerate")]
    DegenerateConic,
    #[error("point {0} does not lie on the conic")]
    NotOnConic(usize),
    #[error("role choices yield different pentagrams: {0:?}")]
    InconsistentPentagrams(Vec<u8>),
    #[error("configuration is not a Schläfli six")]
    NotSchlafli,
    #[error("double-six incidence violated at ({0}, {1})")]
    IncidenceViolation(usize, usize),
    #[error("invariant vector matches no known deformation class")]
    UnknownSpectrum,
    #[error("operation needs a configuration of {expected} lines, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::TowerDepthExceeded { .. } => "TowerDepthExceeded",
            Error::NonPositiveRadicand(_) => "NonPositiveRadicand",
            Error::NonRationalRadicand => "NonRationalRadicand",
            Error::DegenerateSpan => "DegenerateSpan",
            Error::NotSkew(..) => "NotSkew",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::AmbiguousTransversal => "AmbiguousTransversal",
            Error::NotIncident(_) => "NotIncident",
            Error::NotOnLine(_) => "NotOnLine",
            Error::DuplicatePoint(..) => "DuplicatePoint",
            Error::DegenerateConic => "DegenerateConic",
            Error::NotOnConic(_) => "NotOnConic",
            Error::InconsistentPentagrams(_) => "InconsistentPentagrams",
            Error::NotSchlafli => "NotSchlafli",
            Error::IncidenceViolation(..) => "IncidenceViolation",
            Error::UnknownSpectrum => "UnknownSpectrum",
            Error::WrongSize { .. } => "WrongSize",
            Error::InvalidPermutation(_) => "InvalidPermutation",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
