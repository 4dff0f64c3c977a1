//! Exact generating functions for simultaneous conjugacy classes in finite groups.
//!
//! For a finite group `G`, `A_G(t) = Σ α_n tⁿ` counts the orbits of `G` acting
//! by simultaneous conjugation on `Gⁿ`, and `B_G(t) = Σ β_n tⁿ` counts the
//! orbits on pairwise-commuting n-tuples. Both are rational functions with
//! simple poles at `t = 1/m` for integers `m` dividing `|G|`.
//!
//! The crate is `no_std` (with `alloc`). Groups are held as full Cayley tables,
//! which is adequate for the desk-scale orders (up to a few thousand) this
//! library targets.
//!
//! - [`group`]: Cayley-table groups, centralizers, classes, structural predicates.
//! - [`constructions`]: builders from recipes, polycyclic collection,
//!   semidirect products, Frobenius checks, stem groups of small isoclinism families.
//! - [`ratfun`]: exact rational functions and partial fractions over `1/(1 - m t)`.
//! - [`invariants`]: `A_G`, `B_G`, normalized invariants, class-equation inversion.
//! - [`closed_forms`]: closed formulas for several families, used as cross-checks.
//! - [`oracle`]: brute-force orbit counting.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bitset;
pub mod closed_forms;
pub mod constructions;
pub mod group;
pub mod invariants;
pub mod oracle;
pub mod ratfun;
pub mod word;

pub use closed_forms::{Family, FamilyFormula};
pub use constructions::{build, BuildError, GroupSpec, PcPresentation};
pub use group::{CentralizerSpectrum, ConjugacyData, FiniteGroup, GroupError, Subgroup};
pub use invariants::{AsymptoticReport, InvariantRecord};
pub use ratfun::{PartialFraction, Polynomial, RationalFunction};

/// Exact rational number used throughout.
pub type Rational = num_rational::BigRational;
