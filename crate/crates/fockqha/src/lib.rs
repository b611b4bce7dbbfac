//! Exact-arithmetic combinatorics of finite quiver Hecke algebras of type
//! A^(2)_2l at level one.
//!
//! The crate computes, over the shifted-Young-diagram model of the Fock
//! space:
//!
//! * the affine Cartan datum, bilinear form and Weyl reflections ([`cartan`]),
//! * shifted diagrams, standard tableaux, hook lengths and residue-sequence
//!   counts ([`shifted`]),
//! * the Chevalley action on the Fock space ([`fock`]),
//! * exact dimension formulas for the block algebras and idempotent
//!   truncations ([`dimension`]),
//! * Young walls / restricted strict partitions and simple-module counts
//!   ([`crystal`]),
//! * the defect decomposition and representation-type classifier
//!   ([`reptype`]),
//! * explicit matrix models of the homogeneous representations together with
//!   a defining-relations checker ([`qharep`]).
//!
//! All arithmetic is exact: machine integers where coefficients are provably
//! tiny, arbitrary precision integers and rationals everywhere counts can
//! grow.

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod dimension;
pub mod fock;
pub mod qharep;
pub mod reptype;
pub mod shifted;

/// Errors surfaced by parsing, validation and configuration.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parts must be strictly decreasing positive integers, got {0:?}")]
    NotStrict(Vec<u32>),
    #[error("malformed part list {0:?}")]
    BadPartList(String),
    #[error("malformed residue list {0:?} for l = {1}")]
    BadResidueList(String, usize),
    #[error("malformed root coefficients {0:?} (need {1} non-negative entries)")]
    BadRoot(String, usize),
    #[error("invalid Q-polynomial table: {0}")]
    QTable(String),
    #[error("index {0} out of range for l = {1}")]
    IndexOutOfRange(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
