//! Exact computations on the rank-2 polyptych lattices `M_s`.
//!
//! Elements are pairs of integers (or rationals) in chart 1; chart 2 is reached
//! by the shear mutation `(x, y) -> (min(0, s*y) - x, y)`.

pub mod scalar;
pub mod lattice;
pub mod points;
pub mod geometry;
pub mod convex;
pub mod algebra;
pub mod plfn;
pub mod detrop;
pub mod hilbert;
pub mod verify;
pub mod cox;
pub mod svg;
pub mod figures;

pub use scalar::{q, Q, Scalar};
pub use lattice::{ChartId, Element, MElement, MElementR, ShearParam};
pub use points::PointTriple;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shear parameter must be at least 1, got {0}")]
    BadShear(i64),
    #[error("({a}, {b}, {c}) is not on T_s: a + b must equal min(0, s*c)")]
    InvalidTriple { a: String, b: String, c: String },
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("polygon is not integral")]
    NotIntegral,
    #[error("polygon is lower dimensional")]
    DegenerateInput,
    #[error("polytope is not compact")]
    NotCompact,
    #[error("origin is not in the interior of both chart images")]
    OriginNotInterior,
    #[error("empty input")]
    EmptyInput,
    #[error("zero element has no support")]
    ZeroElement,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unbound symbol {0}")]
    UnboundSymbol(String),
}

pub type Result<T> = std::result::Result<T, Error>;
