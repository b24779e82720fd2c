//! Vertex and ray enumeration for pointed polyhedra {x : Hx <= b} by
//! lexicographic reverse search.
//!
//! The library converts between inequality (H) and generator (VR)
//! representations, solves linear programs with the same lexicographic pivot
//! rule, and uses exact rational arithmetic by default. A float mode with
//! zero-snapping and feasibility-slack heuristics is available through the
//! same interfaces. Brute-force oracles over row subsets back the test suite
//! at small sizes.

pub mod cli;
pub mod dictionary;
pub mod enumeration;
pub mod fixtures;
pub mod io;
pub mod lp;
pub mod matrix;
pub mod model;
pub mod numerics;
pub mod oracle;
pub mod pivoting;
pub mod subsets;
pub mod transforms;
pub mod vertex_search;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot canonicalize the zero ray")]
    ZeroRay,
    #[error("inequality has a zero coefficient vector")]
    ZeroInequality,
    #[error("tight rows of the initial vertex form a singular block")]
    SingularBlock,
    #[error("pivot element for basis variable {r} and cobasis variable {s} is zero")]
    ZeroPivotElement { r: usize, s: usize },
    #[error("lexicographic minimum ratio row is not unique")]
    NonUniqueLexMin,
    #[error("VR-representation is not full dimensional")]
    NotFullDimensional,
    #[error("VR-representation has no vertices")]
    EmptyInput,
    #[error("line {line}: duplicate vertex")]
    DuplicateVertex { line: usize },
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("polyhedron Hx<=b has no vertex")]
    NoVertex,
    #[error("polyhedron Hx<=b is empty")]
    EmptyPolyhedron,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub use dictionary::{build_initial_dictionary, DictionaryState};
pub use enumeration::{enumerate, EnumerationEvent, EnumerationOutput};
pub use model::{HRep, InitialVertex, Point, RayPair, VrRep};
pub use numerics::{Rat, Scalar, TolerancePolicy, F64};
pub use transforms::{h_to_vr, vr_to_h, HToVrOutcome};
