//! Exact moments of Lévy's stochastic area.
//!
//! The crate computes the coefficients `w_n` of `dT⊗…⊗dT` in the n-th sticky
//! shuffle power of `{dX⊗dY − dY⊗dX}` along several independent routes:
//!
//! * [`levy::w_direct`] expands the power in the sticky shuffle Hopf algebra
//!   [`tensor`] over the planar Itô algebra [`ito`];
//! * [`levy::w_recovery`] reads the same coefficient off the iterated
//!   coproduct at multirank `(1,…,1)`;
//! * [`levy::w_arc_tuples`] sums signs over alternating 2-in/2-out digraphs;
//! * [`levy::w_digraph`] sums signs over even-cycle permutations
//!   ([`combinatorics`]);
//! * [`levy::w_euler`] uses the closed form `(2m)!·A_{2m}`.
//!
//! [`sim`] holds the floating point Monte Carlo side: planar Brownian paths,
//! Lévy area samples and discretised iterated Itô integrals.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod combinatorics;
mod error;
pub mod ito;
pub mod levy;
mod linear;
mod scalar;
pub mod sim;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{parse_scalar, Scalar};
