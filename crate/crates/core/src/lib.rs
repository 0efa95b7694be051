//! Reducibility of scalar generalized Verma modules for `sl(n)` and
//! `so(2n)` with two-step nilpotent, non-maximal parabolics.
//!
//! The GK dimension of the simple quotient is computed exactly from
//! Robinson–Schensted shapes ([`gk`]); a module is reducible iff that
//! dimension falls short of `dim 𝔲` ([`verdict::reducible_oracle`]). The
//! closed-form parameter criteria in [`verdict`] are checked against it by
//! [`harness`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod gk;
pub mod harness;
pub mod rootdata;
pub mod tableaux;
pub mod verdict;

pub use error::{Error, Result};
pub use exact::{CosetClass, ExactScalar, Rational, Symbol, SIGMA, TAU};
pub use rootdata::{LieKind, LieType, ParabolicSetup, WeightVector};
pub use tableaux::{ScalarSequence, Shape};
pub use verdict::Verdict;
