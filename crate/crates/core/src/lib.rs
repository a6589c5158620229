//! Exact, invariant-driven number theory around Euclid's algorithm.
//!
//! The crate covers the subtractive gcd and its loop invariant, the
//! matrix form of Euclid's algorithm (with Bézout certificates), a catalogue
//! of gcd identities as executable checks, distributivity of functions over
//! gcd, constant-state enumeration of the positive rationals in
//! Eisenstein-Stern (Calkin-Wilf) and Stern-Brocot order, the Eisenstein array,
//! and Brocot's mediant table for approximating ratios.
//!
//! All arithmetic is exact. [`Natural`] and [`Integer`] are arbitrary-precision.
//!
//! Note that `gcd(0, 0) = 0`: gcd is read as the infimum in the division
//! ordering, where 0 is the top element, rather than as "the largest common
//! divisor by size".

pub mod brocot;
pub mod cli;
pub mod distributivity;
pub mod eisenstein;
pub mod enumerate;
mod error;
pub mod gcd;
pub mod identities;
pub mod matrix;
pub mod rational;
pub mod reference;

pub use error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = num_bigint::BigUint;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
