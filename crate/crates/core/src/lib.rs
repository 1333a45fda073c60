//! Numerical semigroup gapsets: standard bases, invariants, recognition,
//! and enumeration.
//!
//! A numerical semigroup is a cofinite submonoid of the non-negative
//! integers under addition; its *gapset* is the finite set of positive
//! integers it misses. This crate represents such a monoid by its
//! *standard basis*: the array of least members of each residue class
//! modulo the multiplicity. On top of that representation it offers:
//!
//! - reduction of any generator list to the standard basis
//!   ([`stdbasis::standard_basis`]),
//! - invariants: genus, Frobenius number, pseudo-Frobenius elements,
//!   fundamental gaps ([`report::invariant_report`]),
//! - three independent deciders for "is this set a gapset?"
//!   ([`check`]),
//! - enumeration and counting of all gapsets by multiplicity and genus
//!   via one-step head extensions ([`extension`]), with DOT/JSON export
//!   ([`dag`]).
//!
//! ```
//! use gapset::{GeneratorSet, stdbasis::standard_basis};
//!
//! let gens = GeneratorSet::new(&[5, 7])?;
//! let basis = standard_basis(&gens)?;
//! assert_eq!(basis.to_string(), "[5, 21, 7, 28, 14]");
//! assert_eq!(basis.genus()?, 12);
//! assert_eq!(basis.frobenius()?, 23);
//! # Ok::<(), gapset::Error>(())
//! ```

pub mod check;
pub mod cli;
pub mod dag;
pub mod error;
pub mod ext_nat;
pub mod extension;
pub mod gapset;
pub mod generators;
pub mod headset;
pub mod report;
pub mod stdbasis;

pub use error::{Error, Result};
pub use ext_nat::ExtNat;
pub use gapset::Gapset;
pub use generators::GeneratorSet;
pub use headset::HeadSet;
