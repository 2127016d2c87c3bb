use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values that must act on the same number of points do not.
    SizeMismatch { left: usize, right: usize },
    /// An image table is not a bijection.
    NotABijection,
    /// A point, vertex or rank lies outside its domain.
    OutOfRange { index: usize, bound: usize },
    /// The operation needs a larger domain than was supplied.
    DomainTooSmall { n: usize, min: usize },
    /// The instance exceeds the size this operation supports.
    Capacity {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    /// The transposition set does not generate the symmetric group
    /// (its transposition graph is disconnected).
    NotGenerating,
    /// A map claimed to be a graph automorphism does not preserve adjacency.
    NotAnAutomorphism,
    /// A line-graph automorphism is not induced by any automorphism of the
    /// base graph.
    NotLiftable,
    /// A stated precondition of the operation does not hold.
    Precondition(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::NotABijection => write!(f, "image table is not a bijection"),
            Error::OutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::DomainTooSmall { n, min } => {
                write!(f, "domain size {n} too small (need at least {min})")
            }
            Error::Capacity {
                what,
                limit,
                requested,
            } => write!(f, "{what} capacity exceeded: {requested} > {limit}"),
            Error::NotGenerating => {
                write!(f, "transposition set does not generate the symmetric group")
            }
            Error::NotAnAutomorphism => write!(f, "map is not a graph automorphism"),
            Error::NotLiftable => write!(
                f,
                "line-graph automorphism is not induced by a base-graph automorphism"
            ),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
