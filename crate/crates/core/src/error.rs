use thiserror::Error;

/// Crate-wide error type. Input validation failures and cap overruns are
/// separate variants so callers (notably the CLI) can map them to distinct
/// exit paths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vertex {0} does not belong to the given subset")]
    VertexNotInSubset(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("cycle enumeration exceeded cap of {0}")]
    CycleCap(usize),
    #[error("graph has {edges} edges, exceeding the cap of {cap}")]
    EdgeCap { edges: usize, cap: usize },
    #[error("enumeration of {size} states exceeds the cap of {cap}")]
    EnumerationCap { size: u128, cap: u128 },

    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("interval lengths must be strictly positive")]
    IntervalLengthNotPositive,
    #[error("missing parameter for step ({0}, {1})")]
    MissingParameter(usize, usize),
    #[error("no central region: cycle {witness:?} has score {score}")]
    NoCentralRegion { witness: Vec<usize>, score: String },
    #[error("step ({0}, {1}) is incompatible with the orientation")]
    IncompatibleStep(usize, usize),
    #[error("orientation is not admissible")]
    NotAdmissible,
    #[error("orientation is not almost-admissible")]
    NotAlmost,
    #[error("target orientation contains a directed cycle")]
    TargetNotAcyclic,
    #[error("could not certify a generic parameter list within {0} attempts")]
    GenericityRetries(usize),

    #[error("constraint count {0} exceeded the elimination cap {1}")]
    EliminationCap(usize, usize),
    #[error("orientations differ on {0} edges; facet test needs exactly one")]
    FacetDiffers(usize),
    #[error("differing edge is oriented in both orientations; one must be blank")]
    FacetNoBlankSide,
    #[error("plot requires exactly 3 vertices, got {0}")]
    PlotDimension(usize),

    #[error("Euler consistency failed: n={n}, |E|={edges}, dual vertices={dual_vertices}, dual edges={dual_edges}")]
    EulerInconsistency {
        n: usize,
        edges: usize,
        dual_vertices: usize,
        dual_edges: usize,
    },
    #[error("internal dual-route mismatch in {0}; this is a bug")]
    InternalMismatch(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
