//! Combinatorics and rational homotopy of subspace arrangements encoded by
//! edge-colored hypergraphs.
//!
//! An [`EdgeColoredHypergraph`] on vertices `1..=ℓ` assigns every edge a
//! color; each color `λ` names the subspace of `ℂ^ℓ` on which every edge of
//! that color has all coordinates equal. From that single input the crate
//! computes:
//!
//! * the labeled intersection lattice, its Möbius function and the
//!   characteristic polynomial ([`lattice`]);
//! * the generalized chromatic polynomial by deletion/contraction and by
//!   brute force, together with lattice-point counts ([`chromatic`]);
//! * the relative atomic complex, a finite rational CDGA model of the
//!   complement, and its cohomology ([`dga`]);
//! * the Harrison word bicomplex, its column spectral sequence, Massey
//!   color systems and triple Massey products ([`homotopy`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod chromatic;
pub mod colorset;
pub mod dga;
mod error;
pub mod homotopy;
pub mod hypergraph;
pub mod lattice;
pub mod linalg;
pub mod partition;
pub mod poly;

pub use colorset::{ColorId, ColorSet};
pub use error::{Error, Result};
pub use hypergraph::{EdgeColoredHypergraph, Violation};
pub use lattice::IntersectionLattice;
pub use partition::VertexPartition;
pub use poly::IntegerPolynomial;
