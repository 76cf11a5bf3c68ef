use serde::Serialize;

/// Which bound a pair of poset elements is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Join,
    Meet,
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Join => f.write_str("join"),
            Bound::Meet => f.write_str("meet"),
        }
    }
}

/// Domain errors. Every variant carries a witness that is enough to
/// reproduce the failure; `serde_json::to_string` gives the
/// machine-readable form used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum Error {
    #[error("element {element} out of range for a structure with {n} elements")]
    OutOfRange { element: usize, n: usize },

    #[error("cover relation has a cycle: {x} and {y} lie below each other")]
    CycleDetected { x: usize, y: usize },

    #[error("{x} is not below {y}")]
    NotComparable { x: usize, y: usize },

    #[error("not a lattice: {x} and {y} have no unique {bound}")]
    NotALattice { x: usize, y: usize, bound: Bound },

    #[error("not an antichain: {x} and {y} are comparable")]
    NotAnAntichain { x: usize, y: usize },

    #[error("{lower} is not covered by {upper}")]
    NotACover { lower: usize, upper: usize },

    #[error("{element} is not join-irreducible")]
    NotJoinIrreducible { element: usize },

    #[error("{element} is not meet-irreducible")]
    NotMeetIrreducible { element: usize },

    #[error("not join-semidistributive: x={x}, y={y}, z={z}")]
    NotJoinSemidistributive { x: usize, y: usize, z: usize },

    #[error("not meet-semidistributive: x={x}, y={y}, z={z}")]
    NotMeetSemidistributive { x: usize, y: usize, z: usize },

    #[error("{face:?} is not a face")]
    NotAFace { face: Vec<usize> },

    #[error("precondition violated: {reason}")]
    PreconditionViolated { reason: String },

    #[error("not order-convex: {x} < {z} < {y} with {z} missing")]
    NotOrderConvex { x: usize, z: usize, y: usize },

    #[error("not a congruence ({axiom}): witness {witness:?}")]
    NotACongruence { axiom: String, witness: Vec<usize> },

    #[error("guard exceeded for {what}: requested {requested}, limit {limit}")]
    GuardExceeded {
        what: String,
        requested: usize,
        limit: usize,
    },

    #[error("exhaustive scan too large: more than {limit} candidates")]
    TooLarge { limit: usize },

    #[error("ordering is not a perfect elimination ordering at position {index}")]
    NotPeo { index: usize },

    #[error("neighborhoods are not nested at position {index}")]
    NeighborhoodNotNested { index: usize },

    #[error("no realization found within {max_steps} doublings")]
    NotFound { max_steps: usize },

    #[error("invariant violated: {what}")]
    InvariantViolated { what: String },

    #[error("format error: {message}")]
    Format { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn guard(what: &str, requested: usize, limit: usize) -> Self {
        Error::GuardExceeded {
            what: what.to_string(),
            requested,
            limit,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("error witnesses serialize")
    }
}
