//! Exact integral polytopes, their Grothendieck group, and the polytope
//! invariants of groups given by two-generator one-relator presentations.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: integral polytopes with exact arithmetic (hulls, Minkowski
//!   sums, erosion, support functions, faces, normal fans).
//! - [`grothendieck`]: formal differences of polytopes and the operations on
//!   them (thickness, symmetrization, pushforward, structural combinators).
//! - [`words`]: free-group words on `x, y`, presentations, Fox derivatives and
//!   Newton polytopes of group-ring elements.
//! - [`marked`]: marked polytopes and the two constructions of the invariant
//!   of a nice presentation (lattice walk and Fox derivative).
//! - [`bns`]: BNS-invariant queries, thickness and splitting complexity.
//! - [`chain3m`]: the Thurston polytope of a closed 3-manifold from the
//!   matrices of a chain complex with one 0-cell, two 1-cells, two 2-cells and
//!   one 3-cell.
//! - [`json`]: the JSON schemas shared with the command-line tool.

pub mod bns;
pub mod chain3m;
pub mod grothendieck;
pub mod json;
pub mod lattice;
pub mod marked;
pub mod simplex;
pub mod words;

pub use bns::{BnsError, BnsReport};
pub use chain3m::{ChainComplexData, ChainError, ChainResult};
pub use grothendieck::{GrothElement, GrothError};
pub use lattice::{Direction, IntegralPolytope, LatticeError, LatticePoint, NormalCone};
pub use marked::{MarkedError, MarkedPolytope, Route};
pub use words::{AbelianizationMap, FreeWord, FreeWordSum, Presentation, WordError};
