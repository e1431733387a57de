use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} components")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a vector needs at least one component")]
    EmptyVector,

    #[error("component {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("at least 2 points are required to fit a line, got {n}")]
    TooFewPoints { n: usize },

    #[error("degenerate x: all x values coincide, slope and angle are undefined")]
    DegenerateX,

    #[error("degenerate y: all y values coincide, the correlation angle is undefined")]
    DegenerateY,

    #[error("angle {0} is outside [0, 180] degrees")]
    AngleOutOfRange(f64),

    #[error("invalid search box: {0}")]
    InvalidSearchBox(&'static str),

    #[error("search box too small: the minimum at ({a}, {b}) lies on or beyond its boundary")]
    BoxTooSmall { a: f64, b: f64 },

    #[error("parse error at line {line}, column {column}: {reason}")]
    Parse {
        line: usize,
        column: usize,
        reason: String,
    },

    #[error("dataset has no data rows")]
    EmptyDataset,

    #[error("column not found: {0}")]
    ColumnNotFound(String),

    #[error("x and y select the same column")]
    SameColumn,

    #[error("line {line} has {found} columns, need at least {needed}")]
    RaggedRow {
        line: usize,
        found: usize,
        needed: usize,
    },

    #[error("plot size {width}x{height} is below the 100x100 minimum")]
    PlotTooSmall { width: u32, height: u32 },
}

impl Error {
    /// True for errors caused by the data itself (bad file contents or a
    /// cloud that admits no line) rather than by how the library was called.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::NonFinite { .. }
                | Error::TooFewPoints { .. }
                | Error::DegenerateX
                | Error::DegenerateY
                | Error::Parse { .. }
                | Error::EmptyDataset
                | Error::ColumnNotFound(_)
                | Error::RaggedRow { .. }
        )
    }
}
