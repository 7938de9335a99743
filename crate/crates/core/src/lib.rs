//! Exact enumeration of packings of generic subset families in finite groups.
//!
//! A packing of subsets `S_1, ..., S_n` of a finite group `G` is a tuple
//! `(g_1, ..., g_n)` whose left translates `g_i S_i` are pairwise disjoint.
//! For generic families the number of packings only depends on `N = |G|`
//! and the cardinalities `|S_i|`, and is given by evaluating a universal
//! power series `U(x, σ_1, σ_2, ...)` built from the integer triangles
//! `t_{i,j}(n)`.
//!
//! The crate computes that series exactly and cross-checks it against
//! independent brute-force counts:
//!
//! - [`group`]: finite groups with dense element indices, subset families.
//! - [`genericity`]: the genericity test and generic families in `Z` and `Z/N`.
//! - [`brute`]: direct enumeration of packings and coverings, intersection
//!   graphs and Boolean-lattice Möbius inversion.
//! - [`hyperforest`]: hyperforests, their poset and Möbius function.
//! - [`triangle`]: the integer triangles, Stirling numbers and derived
//!   sequences.
//! - [`series`]: σ-polynomials, the series `U`, its functional equation and
//!   the packing-count formula.
//! - [`experiments`]: modular periodicity, asymptotics and a differential
//!   equation check.
//! - [`cli`]: the command-line front end used by the `packings` binary.

pub mod bitset;
pub mod brute;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod genericity;
pub mod group;
pub mod hyperforest;
pub mod ring;
pub mod series;
pub mod sigma;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupDescriptor, SubsetFamily};
