//! Exact-arithmetic toolkit for a classical question about mod-p Galois
//! representations of elliptic curves over Q.
//!
//! The library has five layers. [`exact`] provides the substrate: big
//! integers, reduced rationals, integer polynomials with subresultant
//! resultants, prime sieves and Legendre symbols. [`modcurve`] carries the
//! explicit j-invariant maps of the split-Cartan curves of level 3, 5 and 7
//! and enumerates, exactly and completely, the rational points with integral
//! j-invariant. [`elliptic`] computes Weierstrass invariants, quadratic
//! twists and traces of Frobenius by exact point counts. [`galois`] turns
//! trace data into one-sided proofs that a mod-p image is all of GL2(F_p).
//! [`qcurve`] covers the quadratic-field arithmetic behind the companion
//! bounds for Q-curves: class numbers, narrow class numbers, fundamental
//! unit norms and residue scans.
//!
//! Everything is computed over Z or Q; there is no floating point anywhere.
//! All types are immutable after construction and all operations are pure,
//! so values can be freely shared between threads.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod elliptic;
mod error;
pub mod exact;
pub mod galois;
pub mod modcurve;
pub mod qcurve;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

/// Arbitrary-precision signed integer used throughout the crate.
pub use num_bigint::BigInt as Int;
