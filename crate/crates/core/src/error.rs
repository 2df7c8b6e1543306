use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex ({x},{y}) is outside G_{{{a},{b}}}")]
    OutOfBounds {
        x: usize,
        y: usize,
        a: usize,
        b: usize,
    },

    #[error(
        "G_{{{a},{b}}} is out of scope: the closed forms and constructions need a > 2 and b > 2 \
         (ladders G_{{2,b}} are excluded)"
    )]
    UnsupportedSize { a: usize, b: usize },

    #[error("invalid input: {0}")]
    Input(String),

    /// An exact search refused to run, or gave up, under its resource guard.
    /// `incumbent` carries the best value found so far, if any.
    #[error("resource limit: {what}")]
    ResourceLimit {
        what: String,
        incumbent: Option<u64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
