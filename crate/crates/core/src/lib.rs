//! Exact computations with the root data of split quasireductive supergroups.
//!
//! The crate works entirely over the integers and rationals. It covers
//!
//! * the character lattice `X(T) = Z^l` and its pairing with cocharacters ([`lattice`]),
//! * super root data, unimodularity of the supergroup and of its Frobenius
//!   kernels, and the dimension counts of `O(G_r)` and `hy(G_r)` ([`rootdata`]),
//! * the matrix Lie superalgebras `gl(m|n)`, `q(n)` and `p(n)` with exact
//!   structure constants and admissible-base checks ([`liesuper`]),
//! * the weight form `b^lambda` on the odd Cartan and the simple Clifford
//!   supermodule it determines ([`clifford`]),
//! * restricted weights, Steinberg digit decompositions and the character ring
//!   with Frobenius twists ([`steinberg`]),
//! * divided-power arithmetic for a rank-one even pair ([`hyperalg`]).
//!
//! The crate is `no_std` (it needs `alloc`). IO, JSON and the command line live
//! in the companion `superroot` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod clifford;
mod error;
pub mod hyperalg;
pub mod lattice;
pub mod liesuper;
mod linalg;
pub mod rootdata;
pub mod steinberg;

pub use error::{Error, Result};
pub use lattice::{Coweight, Weight};
pub use liesuper::{LieElement, LieFamily, LieSuperAlgebra, Parity};
pub use rootdata::{OrderFunctional, SuperRootDatum};
