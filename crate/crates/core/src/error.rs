//! Shared error type for all toolkit operations.

use thiserror::Error;

/// Errors surfaced by exact computations.
///
/// Every failure is a structured value; nothing panics on user input.
#[derive(Debug, Error)]
pub enum Error {
    /// Requested a root-system family or rank outside the supported range.
    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),

    /// A word contained an index outside `1..=rank`, or was not reduced
    /// where a reduced word is required.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// A weight failed dominance or shape validation.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// A module build would exceed the configured dimension cap.
    #[error("dimension cap exceeded: need {need}, cap {cap}")]
    DimensionCap { need: u64, cap: u64 },

    /// A valuation was requested for the zero element.
    #[error("valuation of zero is undefined")]
    ZeroInput,

    /// Mismatched shapes: vector lengths, variable counts, ambient dims.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Two colliding vectors could not be separated by a single scalar
    /// elimination; violates the one-dimensional-leaf contract.
    #[error("leaf separation failure: {0}")]
    LeafSeparation(String),

    /// A product fell outside the span it must lie in.
    #[error("product expansion failed: {0}")]
    ProductOutsideSpan(String),

    /// A value was not representable in the generator value semigroup.
    #[error("value not representable: {0}")]
    NotRepresentable(String),

    /// Sampled semigroup data is not closed under addition in range.
    #[error("semigroup not additively closed: {0}")]
    NotAdditivelyClosed(String),

    /// Hilbert data inconsistent with the claimed polytope.
    #[error("inconsistent growth data: {0}")]
    InconsistentGrowth(String),

    /// Subduction hit the step cap without terminating.
    #[error("subduction inconclusive after {0} steps")]
    SubductionInconclusive(usize),

    /// The value semigroup hull was still growing at the level cap, so the
    /// body is not certified. Raising the cap may resolve it: polytopes
    /// with vertex denominators up to d stabilize once the cap exceeds d.
    #[error("hull not stabilized at level cap {0}; raise the cap")]
    HullNotStabilized(u32),

    /// Degenerate polytope where a full-dimensional one is required.
    #[error("degenerate polytope: {0}")]
    Degenerate(String),

    /// Isotypic data failed validation (multiplicity, dominance, levels).
    #[error("invalid isotypic data: {0}")]
    InvalidIsotypicData(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
