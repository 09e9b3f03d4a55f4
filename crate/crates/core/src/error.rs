use thiserror::Error;

/// Errors raised by diagram construction and invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty diagram")]
    EmptyDiagram,
    #[error("malformed PD code: {0}")]
    Syntax(String),
    #[error("{0}")]
    Input(String),
    #[error("edge label {label} used {count} time(s), expected 2")]
    LabelMultiplicity { label: i64, count: usize },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("traversal has {0} components, expected 1")]
    MultiComponent(usize),
    #[error("PD code is not planar (genus {0})")]
    NotPlanar(usize),
    #[error("inconsistent orientation at crossing {0}")]
    Orientation(usize),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("diagram is not oriented")]
    Unoriented,
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("diagram is not checkerboard colorable")]
    NotColorable,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("no coloring makes every crossing type b")]
    NoTypeBColoring,
    #[error("crossing {0} is not a dealternator")]
    NotDealternator(usize),
    #[error("dealternator {0} is nugatory; no cellular torus lift exists")]
    NugatoryDealternator(usize),
    #[error("no torus realization satisfies the lift postconditions")]
    LiftFailed,
    #[error("checkerboard signatures disagree: white {white}, black {black}")]
    SignatureMismatch { white: i64, black: i64 },
    #[error("chosen color has no faces")]
    NoFaces,
    #[error("braiding failed: {0}")]
    Braiding(String),
    #[error("generation failed after {0} attempts")]
    Generation(usize),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
