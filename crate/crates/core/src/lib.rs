//! Jacobi elements of `ℤ[S_n]`.
//!
//! An element `a = Σ a(σ)σ` of the integral group ring of the symmetric
//! group is a *Jacobi element* when
//! `Σ a(σ)·[x_{σ(1)}, …, x_{σ(n)}] = 0` holds in every Lie ring, with
//! left-normed brackets `[x₁, …, x_n] = [[x₁, …, x_{n−1}], x_n]`. A subset of
//! `S_n` is Jacobi when its 0/1 indicator is.
//!
//! The crate provides
//!
//! * exact arithmetic in `ℤ[S_n]` ([`group_ring`]) and the multilinear free
//!   associative ring ([`free_algebra`]),
//! * the bracket element `ω_n` built from shuffles ([`shuffles`]),
//! * four independent Jacobi deciders plus a subset criterion ([`jacobi`]),
//! * a saturated ℤ-basis of the lattice of Jacobi elements ([`lattice`]),
//! * exhaustive and pruned search for Jacobi subsets ([`search`]),
//! * the text formats shared by the `jacobi` command-line tool ([`text`]).

pub mod error;
pub mod free_algebra;
pub mod group_ring;
pub mod jacobi;
pub mod lattice;
pub mod perm;
pub mod search;
pub mod shuffles;
pub mod text;

pub use error::{Error, Result};
pub use free_algebra::MultilinearPolynomial;
pub use group_ring::GroupRingElement;
pub use lattice::{IntegerMatrix, LatticeBasis};
pub use perm::Permutation;
pub use shuffles::{JacobiIndexSets, Shuffle};
