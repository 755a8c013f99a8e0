//! Exact-arithmetic core for special instanton monads on P^(2n+1).
//!
//! Everything here works over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is `no_std` + `alloc` so the math can
//! be embedded anywhere; IO and file formats live in the companion CLI crate.
//!
//! Module map:
//! - [`linalg`]: dense rational matrices, fraction-free rank/kernel, pencils
//!   and their maximal minors.
//! - [`forms`]: binary forms, dual forms, catalecticants, symmetric-power
//!   group actions, gcd of forms.
//! - [`monad`]: the monad matrices A(z), B(z), verification, morphism spaces,
//!   kernel sections and the Chern-series check.
//! - [`moduli`]: moduli membership, transports, dimension counts, stabilizers
//!   and trace invariants.
//! - [`cohomology`]: line bundle cohomology and the natural cohomology table.
//! - [`sample`]: the seeded PRNG used for all randomized checks.

#![cfg_attr(not(test), no_std)]
// indexed loops follow the matrix formulas more closely than iterator chains
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod cohomology;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod moduli;
pub mod monad;
pub mod sample;

pub use error::Error;

/// Exact scalar used throughout: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Shorthand for a small integer as a `Rat`. Handy in tests and examples.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(n))
}

/// Shorthand for `n/d` as a `Rat`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(num_bigint::BigInt::from(n), num_bigint::BigInt::from(d))
}

pub type Result<T> = core::result::Result<T, Error>;
