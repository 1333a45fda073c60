//! One-stop invariant summary for a generated monoid.
//!
//! Bundles the standard basis with every derived invariant: multiplicity,
//! gcd, genus, Frobenius number, pseudo-Frobenius elements, whole-class
//! pseudo-Frobenius residues, and the fundamental gaps of the gapset. When
//! the gcd exceeds 1 the gapset is infinite, so the genus is reported as
//! infinite, the Frobenius number and fundamental gaps are absent, and
//! pseudo-Frobenius elements are searched within a stated finite window.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ext_nat::ExtNat;
use crate::generators::GeneratorSet;
use crate::stdbasis::standard_basis;

/// Invariants of the monoid generated by one generator set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Least positive element.
    pub multiplicity: u64,
    /// Standard basis heads, indexed by residue class.
    pub heads: Vec<ExtNat>,
    /// Greatest common divisor of the generators.
    pub gcd: u64,
    /// True exactly when `gcd == 1`, i.e. the gapset is finite.
    pub is_numerical: bool,
    /// Number of gaps; infinite exactly when `is_numerical` is false.
    pub genus: ExtNat,
    /// Largest gap, or −1 for the gap-free monoid; absent when infinite.
    pub frobenius: Option<i64>,
    /// Pseudo-Frobenius elements; for a non-numerical monoid, those found
    /// within `pf_search_bound`.
    pub pseudo_frobenius: Vec<u64>,
    /// Search window used for `pseudo_frobenius` when the gapset is
    /// infinite (the largest finite head); absent otherwise.
    pub pf_search_bound: Option<u64>,
    /// Residue classes lying entirely inside the pseudo-Frobenius set;
    /// nonempty exactly when the gapset is infinite.
    pub pf_star_classes: Vec<u64>,
    /// Gaps whose proper multiples are all outside the gapset; absent when
    /// the gapset is infinite.
    pub fundamental_gaps: Option<Vec<u64>>,
}

/// Computes the full invariant report for `generators`.
pub fn invariant_report(generators: &GeneratorSet) -> Result<InvariantReport> {
    let basis = standard_basis(generators)?;
    let gcd = basis.gcd();
    debug_assert_eq!(gcd, generators.gcd());
    let is_numerical = basis.all_finite();
    debug_assert_eq!(is_numerical, gcd == 1);

    let report = if is_numerical {
        InvariantReport {
            multiplicity: basis.modulus(),
            heads: basis.heads().to_vec(),
            gcd,
            is_numerical,
            genus: ExtNat::Fin(basis.genus()?),
            frobenius: Some(basis.frobenius()?),
            pseudo_frobenius: basis.pseudo_frobenius()?,
            pf_search_bound: None,
            pf_star_classes: basis.pf_star_classes(),
            fundamental_gaps: Some(basis.gapset()?.fundamental_gaps()),
        }
    } else {
        let bound = basis.max_finite_head();
        InvariantReport {
            multiplicity: basis.modulus(),
            heads: basis.heads().to_vec(),
            gcd,
            is_numerical,
            genus: ExtNat::Inf,
            frobenius: None,
            pseudo_frobenius: basis.pf_within(bound)?,
            pf_search_bound: Some(bound),
            pf_star_classes: basis.pf_star_classes(),
            fundamental_gaps: None,
        }
    };
    debug_assert_eq!(report.pf_star_classes.is_empty(), is_numerical);
    Ok(report)
}
