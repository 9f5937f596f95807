//! Exact PBW normal forms for the quantum Euclidean group, its dual, and the
//! Heisenberg double built from them, with tooling to verify identities,
//! automorphisms, lattice centers and module actions.

pub mod autgrp;
pub mod catalog;
pub mod gwa;
pub mod hopf;
pub mod parse;
pub mod pbw;
pub mod repmod;
pub mod scalar;
pub mod zlattice;

pub type Scalar = scalar::ScalarFraction;
pub type Elem = pbw::Element;
