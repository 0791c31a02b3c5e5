//! Exact laboratory for the overpartition analogue of the Andrews-Gordon
//! identities.
//!
//! Four families of objects are counted by the same numbers for every
//! `1 <= i <= k`:
//!
//! - overpartitions satisfying a multiplicity condition (family B),
//! - Frobenius symbols whose successive ranks lie in a window (family C),
//! - overpartitions with a prescribed Durfee dissection (family D),
//! - four-step lattice paths under the special `(k,i)`-conditions (family E).
//!
//! The crate provides the objects themselves ([`objects`], [`paths`]), the
//! bijections between them ([`bijections`]), exact truncated q-series for all
//! generating functions ([`qseries`]), orchestrated identity checks
//! ([`verify`]) and a thin command-line front end ([`cli`]).
//!
//! ```
//! use gordon_overpartitions::objects::enumerate_overpartitions;
//! assert_eq!(enumerate_overpartitions(3).len(), 8);
//! ```

pub mod bijections;
pub mod cli;
pub mod objects;
pub mod paths;
pub mod qseries;
pub mod verify;

mod error;

pub use error::{Error, Result};
