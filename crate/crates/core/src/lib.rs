//! Exact computation of the rank-selected homology representations of the symmetric
//! group acting on the poset of `r`-colored injective words.
//!
//! Two independent routes are provided and cross-checked:
//!
//! * [`poset`] builds the poset explicitly and counts maximal chains of rank-selected
//!   subposets fixed by each conjugacy class, giving the characters `α_P(S)`; the
//!   [`rank_selection`] module turns these into `β_P(S)` by inclusion–exclusion.
//! * [`rank_selection`] and [`tau`] also compute the same multiplicities from closed
//!   formulas and from the parity of the `τ` statistic on pairs of permutations and
//!   colored tableaux, without touching the poset.
//!
//! [`verify`] runs named suites comparing the routes, and [`render`] formats tables and
//! reports for the `injw` binary.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod poset;
pub mod rank_selection;
pub mod render;
pub mod report;
pub mod tau;
pub mod verify;

pub use error::{Error, Result};
