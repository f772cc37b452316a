use core::fmt;

/// Errors reported by the library operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index was not smaller than the host's vertex count.
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    /// An edge contained a repeated vertex or no vertex at all.
    MalformedEdge(&'static str),
    /// A numeric argument was outside the operation's domain.
    BadArgument(&'static str),
    /// A stated precondition of the operation does not hold for the input.
    ContractViolation(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, num_vertices } => {
                write!(f, "vertex index {vertex} out of range (num_vertices = {num_vertices})")
            }
            Error::MalformedEdge(msg) => write!(f, "malformed edge: {msg}"),
            Error::BadArgument(msg) => write!(f, "bad argument: {msg}"),
            Error::ContractViolation(msg) => write!(f, "contract violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
