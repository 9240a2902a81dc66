use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {edge} out of range for size {size}")]
    EdgeOutOfRange { edge: usize, size: usize },

    #[error("operation requires order >= {needed}, got {order}")]
    OrderTooSmall { needed: usize, order: usize },

    #[error("{search} search cap exceeded: {actual} > {cap} (raise with TRUNKIT_CAP_OVERRIDE)")]
    CapExceeded {
        search: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("search cancelled")]
    Cancelled,

    #[error("graph has a loop at vertex {0}")]
    LoopPresent(usize),

    #[error("graph is not simple")]
    NotSimple,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("vertex {vertex} has odd valency {valency}")]
    OddValency { vertex: usize, valency: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not regular")]
    NotRegular,

    #[error("edge {edge} is not incident with vertex {vertex}")]
    NotIncident { edge: usize, vertex: usize },

    #[error("endpoints must be distinct")]
    SameEndpoints,

    #[error("constituent at source vertex {vertex}: {reason}")]
    BadConstituent { vertex: usize, reason: String },

    #[error("no connecting path inside the constituent at source vertex {vertex}")]
    NoConnectingPath { vertex: usize },

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("inconsistent truncation: {0}")]
    InconsistentTruncation(String),

    #[error("invalid Hamilton decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid endpoint pairing: {0}")]
    InvalidPairing(String),

    #[error("edge density {0} outside [0, 1]")]
    InvalidDensity(String),

    #[error("{what} must be {expected}, got {got}")]
    Parity {
        what: &'static str,
        expected: &'static str,
        got: usize,
    },

    #[error("requested value {k} outside the attainable range {low}..={high}")]
    OutOfRange { k: usize, low: usize, high: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("class II source with odd maximum valency {0} is not covered by the construction")]
    ClassTwoOddValency(usize),

    #[error("unknown catalog graph {0:?}")]
    UnknownGraph(String),

    #[error("construction produced an invalid result: {0}")]
    ConstructionFailed(String),
}

impl Error {
    /// The input is outside an operation's domain or a search cap, as
    /// opposed to a construction or consistency failure.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::OrderTooSmall { .. }
                | Error::CapExceeded { .. }
                | Error::Cancelled
                | Error::LoopPresent(_)
                | Error::NotSimple
                | Error::IsolatedVertex(_)
                | Error::OddValency { .. }
                | Error::Disconnected
                | Error::NotRegular
                | Error::BadConstituent { .. }
                | Error::Parity { .. }
                | Error::OutOfRange { .. }
                | Error::Precondition(_)
                | Error::ClassTwoOddValency(_)
        )
    }
}
