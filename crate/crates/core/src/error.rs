use thiserror::Error;

/// Errors raised by parsing, validation and the analysis routines.
///
/// Token positions are 1-based indices into the whitespace/comma separated
/// token stream of the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    Empty,
    #[error("token {position} ({token:?}) is not an integer")]
    NotInteger { position: usize, token: String },
    #[error("token {position}: value {value} is outside 1..={n}")]
    OutOfRange {
        position: usize,
        value: i64,
        n: usize,
    },
    #[error("token {position}: value {value} occurs twice, not a bijection")]
    Duplicate { position: usize, value: usize },
    #[error("token {position}: permutation length {n} is even")]
    EvenLength { position: usize, n: usize },
    #[error("permutation is not Sturm: {reason}")]
    NotSturm { reason: &'static str },
    #[error("permutation is not a meander")]
    NotMeander,
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("labels must be distinct (got {label} twice)")]
    SameLabel { label: usize },
    #[error("label {label} is the last crossing and has no outgoing arc")]
    NoOutgoingArc { label: usize },
    #[error("equilibrium {label} is stable (Morse index 0)")]
    StableEquilibrium { label: usize },
    #[error("zero number level {k} is not below the Morse index {morse}")]
    LevelOutOfRange { k: i64, morse: i64 },
    #[error("target set is empty")]
    EmptyTargetSet,
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("window is inconsistent with any Sturm completion: {0}")]
    InconsistentWindow(String),
    #[error("size {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

impl Error {
    /// Stable snake_case identifier used in one-line CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Empty => "empty",
            Error::NotInteger { .. } => "not_integer",
            Error::OutOfRange { .. } => "out_of_range",
            Error::Duplicate { .. } => "not_bijection",
            Error::EvenLength { .. } => "even_length",
            Error::NotSturm { .. } => "not_sturm",
            Error::NotMeander => "not_meander",
            Error::LabelOutOfRange { .. } => "label_out_of_range",
            Error::SameLabel { .. } => "same_label",
            Error::NoOutgoingArc { .. } => "no_outgoing_arc",
            Error::StableEquilibrium { .. } => "stable_equilibrium",
            Error::LevelOutOfRange { .. } => "level_out_of_range",
            Error::EmptyTargetSet => "empty_target_set",
            Error::InvalidWindow(_) => "invalid_window",
            Error::InconsistentWindow(_) => "inconsistent_window",
            Error::BoundExceeded { .. } => "bound_exceeded",
        }
    }

    /// True for errors caused by malformed input rather than by a failed property.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::NotSturm { .. }
                | Error::NotMeander
                | Error::InconsistentWindow(_)
                | Error::EmptyTargetSet
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
