use thiserror::Error;

/// Errors raised while ingesting inputs or running the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{text}` as a decimal number: {reason}")]
    Decimal { text: String, reason: &'static str },

    #[error("coordinate of point {index} is not finite")]
    NonFinite { index: usize },

    #[error("coordinate of point {index} exceeds the exact range (|value| * 10^scale must stay below 2^52)")]
    CoordinateRange { index: usize },

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("root index {root} out of range for {len} points")]
    RootOutOfRange { root: usize, len: usize },

    #[error("at least {needed} points are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),

    #[error("direction vector must be non-zero")]
    ZeroDirection,

    /// A non-root point has zero projection on the monotonicity axis.
    #[error("point {point} lies on the line through the root perpendicular to the axis")]
    OnRootLine { point: usize },

    /// A non-root point lies on one of the two axes of an orthogonal system.
    #[error("point {point} lies on a coordinate axis of the orthogonal system")]
    OnSystemAxis { point: usize },

    #[error("point {point} is not on the requested side of the axis")]
    WrongSide { point: usize },

    #[error("edge ({0}, {1}) references a missing vertex")]
    EdgeOutOfRange(usize, usize),

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) appears twice")]
    DuplicateEdge(usize, usize),

    #[error("graph is not connected: vertex {unreachable} cannot be reached from the root")]
    Disconnected { unreachable: usize },

    #[error("parent links do not form a tree rooted at {root}")]
    NotATree { root: usize },

    #[error("empty query range: lower bound exceeds upper bound")]
    InvalidRange,

    #[error("brute-force oracle limited to {limit} points, got {got}")]
    SizeGuard { limit: usize, got: usize },

    #[error("sweep bookkeeping violated: {0}")]
    Bookkeeping(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
