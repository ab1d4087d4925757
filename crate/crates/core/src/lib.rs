//! Exact-arithmetic PBW degenerations of type-A Demazure modules.
//!
//! For a permutation `w` in the symmetric group and a dominant integral
//! weight `λ` of `sl_n`, this crate computes
//!
//! * the Demazure module dimension `dim D_{wλ}` via the divided-difference
//!   character recursion ([`demazure::demazure_dim`]),
//! * the graded, torus-weight-refined profile of the PBW filtration on the
//!   Demazure module ([`demazure::classical_filtration_profile`]),
//! * the Cartan component of the degenerate module — the span closure of the
//!   highest tensor under degenerate lowering operators — together with its
//!   profile ([`cartan::cartan_profile`]) and the kernel profile of the
//!   comparison map between the two ([`cartan::kernel_profile`]),
//! * monomial bases: minimal monomials in a graded-lex order, the lattice
//!   sets they span, and their Minkowski sums ([`fflv`]),
//! * symbolic coefficient polynomials of exponentiated lowering operators
//!   acting on fundamental modules, and the certificate checks built from
//!   them ([`zpoly`], [`plucker`]).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and every dimension is an integer computed by rank, never by numerics.
//! The crate is `no_std`-compatible (it requires `alloc`); the companion
//! CLI crate carries IO, serialization and the sweep driver.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod cartan;
pub mod character;
pub mod demazure;
pub mod error;
pub mod fflv;
pub mod linalg;
pub mod plucker;
pub mod profile;
pub mod wedge;
pub mod weyl;
pub mod zpoly;

pub use error::Error;
pub use linalg::{EchelonSpan, Rational, SparseVector};
pub use profile::GradedProfile;
pub use weyl::{DominantWeight, Permutation, RootIndex, WeightVector};
