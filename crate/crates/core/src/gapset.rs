//! Finite sets of positive integers viewed as semigroup complements.

use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::headset::HeadSet;

/// A finite, strictly ascending set of positive integers.
///
/// When the complement in the non-negative integers is additively closed this
/// is the gapset of a numerical semigroup; construction alone does not check
/// that (see the recognition functions in [`crate::check`]), it only enforces
/// the structural invariants: no zero, no duplicates, ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gapset {
    gaps: Vec<u64>,
}

impl Gapset {
    /// Builds a gap set from raw elements: sorts, deduplicates, rejects 0.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.contains(&0) {
            return Err(Error::ZeroInGapset);
        }
        let mut gaps = raw.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        Ok(Self { gaps })
    }

    /// Construction from elements already known sorted, unique, and positive.
    pub(crate) fn from_sorted_unchecked(gaps: Vec<u64>) -> Self {
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!gaps.contains(&0));
        Self { gaps }
    }

    /// The elements, strictly ascending.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of elements.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// True when there are no gaps (the semigroup is all of ℕ₀).
    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Largest gap, if any.
    pub fn max(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    /// Membership test.
    pub fn contains(&self, x: u64) -> bool {
        self.gaps.binary_search(&x).is_ok()
    }

    /// Gaps all of whose proper multiples lie outside the set.
    ///
    /// Only multiples up to the largest gap need checking; anything beyond is
    /// outside by finiteness.
    pub fn fundamental_gaps(&self) -> Vec<u64> {
        let Some(max) = self.max() else {
            return Vec::new();
        };
        self.gaps
            .iter()
            .copied()
            .filter(|&x| {
                let mut multiple = 2 * x;
                while multiple <= max {
                    if self.contains(multiple) {
                        return false;
                    }
                    multiple += x;
                }
                true
            })
            .collect()
    }

    /// Canonical head set of the complement.
    ///
    /// The modulus is the least positive integer outside the set; entry `i`
    /// is the least positive integer of residue class `i` outside the set.
    /// Total on any structurally valid input; when the input is a genuine
    /// gapset this inverts [`HeadSet::gapset`].
    pub fn head_set(&self) -> HeadSet {
        let mut m = 1u64;
        // Gaps are sorted and unique, so the least missing positive integer
        // is found by walking the initial run 1, 2, 3, …
        for &gap in &self.gaps {
            if gap == m {
                m += 1;
            } else if gap > m {
                break;
            }
        }
        let mut heads = Vec::with_capacity(m as usize);
        for i in 0..m {
            let mut x = if i == 0 { m } else { i };
            while self.contains(x) {
                x += m;
            }
            heads.push(ExtNat::Fin(x));
        }
        HeadSet::new(heads).expect("class minima satisfy the head-set invariants")
    }
}
