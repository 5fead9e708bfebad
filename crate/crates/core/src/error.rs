use thiserror::Error;

/// Errors produced by the library.
///
/// Vertex numbers carried in error payloads are 1-based, matching the
/// text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a maximal outerplanar graph needs at least 3 vertices, got {0}")]
    TooSmall(usize),

    #[error("row for vertex {vertex}: {{{low}, {high}}} {reason}")]
    InvalidAttachment {
        vertex: usize,
        low: usize,
        high: usize,
        reason: &'static str,
    },

    #[error("not a maximal outerplanar graph: {0}")]
    NotMop(String),

    #[error("graph is not chordal: vertex {0} is not simplicial in its prefix")]
    NotChordal(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    Domain(String),

    #[error("invalid edge colouring: {0}")]
    InvalidColoring(String),

    #[error("scale limit exceeded: {what} = {value} > {cap}")]
    ScaleLimit {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("no rainbow colouring found with at most {k_max} colours")]
    Exhausted { k_max: usize },

    #[error("search timed out while testing {k} colours")]
    Timeout { k: usize },

    #[error("palette exhausted: colour {color} exceeds the bound {bound}")]
    PaletteExhausted { color: u32, bound: u32 },

    #[error("edge set is not a valid cut: {0}")]
    NotACut(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
