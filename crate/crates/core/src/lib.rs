//! Error detection with block codes on the q-ary symmetric channel.
//!
//! The crate answers three questions about a code `C` over `GF(q)`:
//!
//! * how likely an undetected error is ([`ue_probability`]), and whether `C`
//!   is *good* or *bad* for error detection;
//! * the critical length `μ(d, k)` past which no `[n, k, d]` code or its dual
//!   can be good ([`mu_threshold`]);
//! * the asymptotic approximations of `μ` when `d ≫ k` or `k ≫ d`
//!   ([`asymptotics`]).
//!
//! Codes are built and enumerated exactly over prime fields ([`galois`],
//! [`code_model`]). Everything here is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod code_model;
mod error;
pub mod galois;
pub mod mu_threshold;
mod num;
pub mod ue_probability;

pub use asymptotics::{LargeDimension, LargeDistance, SeriesApprox};
pub use code_model::{CodeSize, CodewordList, DistributionA, EnumerationLimits, GeneratorMatrix};
pub use error::{Error, Result};
pub use galois::{FieldElement, FieldMatrix, PrimeModulus};
pub use mu_threshold::{MuResult, ThresholdProblem};
pub use ue_probability::{ChannelPoint, Classification, Verdict};
