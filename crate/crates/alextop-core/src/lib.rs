//! Finite Alexandrov topological spaces and their dimension theory.
//!
//! A finite topological space is equivalently a preorder on its points
//! (the specialisation preorder), and its closed sets are exactly the
//! down-sets of that preorder. This crate provides:
//!
//! * lossless conversion between the closed-set-family form and the
//!   preorder form ([`space`]);
//! * a definitional brute-force oracle for irreducibility and Krull
//!   dimension ([`irreducible`], [`dimension`]);
//! * a fast height computation via strongly-connected-component
//!   condensation and DAG longest path ([`scc`], [`dimension`]);
//! * the Kolmogorov quotient with its order-reflection and
//!   closure-bijection checks ([`quotient`]);
//! * exhaustive enumeration of all labeled preorders and posets on small
//!   carriers for census-style verification ([`enumerate`]).
//!
//! Dimensions are plain integers with `-1` for the empty space; on a
//! finite carrier every supremum in sight collapses to a maximum.
//!
//! The crate is `no_std` (with `alloc`); file formats and the CLI live in
//! the companion `alextop` crate.

#![no_std]

extern crate alloc;

pub mod dimension;
pub mod enumerate;
pub mod irreducible;
pub mod quotient;
pub mod scc;
pub mod set;
pub mod space;

pub use dimension::{height, krull_dimension_bruteforce, verify_theorem, DimensionReport};
pub use enumerate::{census, enumerate_posets, enumerate_preorders, CensusRow, EnumerateError};
pub use irreducible::{
    closed_sets, irreducible_closed_sets, is_irreducible, point_closures, IrreducibilityWitness,
};
pub use quotient::{check_closure_bijection, check_order_reflection, kolmogorov_quotient, KolmogorovQuotient};
pub use set::PointSet;
pub use space::{
    alexandrov_topology, specialisation_preorder, validate_topology, FiniteTopology, Preorder,
    PreorderError, TopologyError,
};
