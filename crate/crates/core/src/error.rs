use thiserror::Error;

/// Errors produced by graph analysis, landmark handling and reconstruction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or invalid input. `line` is 1-based when the error comes from parsed text.
    #[error("{}", match .line { Some(l) => format!("line {l}: {}", .msg), None => .msg.clone() })]
    Input { line: Option<usize>, msg: String },

    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(String, String),

    /// Landmarks fail to give distinct coordinates; carries one colliding node pair.
    #[error("landmarks do not form a resolution set: {0} and {1} share a distance vector")]
    NotResolving(String, String),

    /// Coordinates that do not determine a unique graph, or no graph at all.
    #[error("coordinates not realizable by the unit-difference rule: {0}")]
    Unrealizable(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    /// Exhaustive search was requested beyond its configured size cap.
    #[error("graph has {nodes} nodes, exceeding the exact search limit of {limit}; use greedy mode")]
    ExactLimit { nodes: usize, limit: usize },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input {
            line: None,
            msg: msg.into(),
        }
    }

    pub(crate) fn at_line(line: usize, msg: impl Into<String>) -> Self {
        Error::Input {
            line: Some(line),
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
