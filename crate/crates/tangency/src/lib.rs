//! Combinatorics of real-root multiplicity patterns along an oriented line.
//!
//! A *composition* is a finite ordered list of positive integers recording the
//! multiplicities of the distinct real roots of a polynomial, in root order.
//! Degenerations of root configurations (adjacent roots colliding, a conjugate
//! pair landing on the real axis) induce a graded partial order on
//! compositions. This crate implements:
//!
//! - the composition algebra: norms, elementary merge/insert degenerations,
//!   the string/atom deconstruction of the negativity set of the witness
//!   polynomial ∏(u−i)^ω(i) ([`composition`]);
//! - the degeneration order, morphism tests, finite poset generation and
//!   Hasse diagrams ([`poset`]);
//! - cell structures on the stratified spaces of real degree-d polynomials:
//!   dimensions, f-vectors, Euler characteristics, normal stars, ramification
//!   counts ([`cells`]);
//! - markers (distinguished roots of negativity components) and their
//!   transport along degenerations ([`markers`]);
//! - the local cell model of the space of tangent trajectories near a
//!   trajectory with a given tangency pattern ([`tmodel`]);
//! - exact rational-arithmetic polynomial routines — square-free
//!   decomposition, Sturm root isolation ([`poly`]) — and the classifier from
//!   concrete rational polynomials to composition types, negativity-component
//!   analysis, and one-parameter family reports ([`classify`]);
//! - DOT export ([`dot`]) and a self-verification suite ([`verify`]).
//!
//! The companion binary `tangency` exposes all of it on the command line; the
//! `examples/` directory walks through each capability.

pub mod cells;
pub mod classify;
pub mod composition;
pub mod dot;
pub mod markers;
pub mod poly;
pub mod poset;
pub mod tmodel;
pub mod verify;

pub use cells::{Ambient, FVector, StarCell, StarComplex};
pub use classify::{FamilyPolynomial, FamilyReport, NegativityComponent, TransitionCheck};
pub use composition::{Block, BlockDecomposition, BlockKind, Composition, ElementaryOp};
pub use markers::{BlockStructure, MarkedComposition, MarkerBlock};
pub use poly::{IsolatedRoot, RationalPolynomial, RootEnclosure};
pub use poset::{FinitePoset, GenerationMode, Morphism, PosetKind};
pub use tmodel::{LinkComplex, ProductLabel, TrajectoryCell, TrajectoryComplex};

/// One minimal witness for a marker-transport ambiguity: a final marker and
/// an elementary-operation path that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbiguityWitness {
    pub marker: usize,
    pub ops: Vec<ElementaryOp>,
}

impl std::fmt::Display for AmbiguityWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let path = self
            .ops
            .iter()
            .map(|op| op.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "marker {} via [{path}]", self.marker)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Composition entries must be positive.
    #[error("composition entries must be positive, got {entry}")]
    Reject { entry: i64 },

    /// Operation index outside the legal range for the given support size.
    #[error("index {index} out of range for support size {support}")]
    Index { index: usize, support: usize },

    /// Even norm required (negativity sets of odd-norm patterns are unbounded).
    #[error("norm {norm} is odd; an even norm is required here")]
    Parity { norm: u32 },

    /// Norm/degree mismatch against the ambient degree universe.
    #[error("composition norm {norm} incompatible with degree {degree} (needs norm ≤ degree and equal parity)")]
    Degree { norm: u32, degree: u32 },

    /// The one-point label (d) is the cone apex; sphere ambients exclude it.
    #[error("the maximal-multiplicity label is the cone apex and carries no single sphere cell")]
    Apex,

    /// A required order relation does not hold.
    #[error("order violation: {detail}")]
    Order { detail: String },

    /// Marker transport is genuinely path-dependent for this pair.
    #[error("ambiguous marker transport: distinct final markers {markers:?}; witnesses: {}",
        .witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("; "))]
    Ambiguous {
        markers: Vec<usize>,
        witnesses: Vec<AmbiguityWitness>,
    },

    /// The marker is not a component minimum of the composition it marks.
    #[error("position {marker} is not a marker of the composition")]
    InvalidMarker { marker: usize },

    /// Input outside the operation's domain.
    #[error("domain error: {detail}")]
    Domain { detail: String },

    /// The empty composition has no per-entry structure to enumerate.
    #[error("empty base composition")]
    EmptyBase,

    /// The zero polynomial has no divisor type.
    #[error("the zero polynomial cannot be classified")]
    ZeroPoly,

    /// A square-free polynomial was required.
    #[error("polynomial is not square-free")]
    NotSquarefree,

    /// The negativity set is unbounded (odd degree or negative leading term).
    #[error("the negativity set is unbounded (odd degree or nonpositive leading coefficient)")]
    UnboundedNegative,

    /// Malformed text input.
    #[error("parse error: {detail}")]
    Parse { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
