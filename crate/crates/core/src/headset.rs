//! Head-set representation of a sub-semigroup: per-residue minima.
//!
//! A head set over modulus `m` stores, for each residue class `i` mod `m`,
//! the least positive semigroup element congruent to `i` (infinity when the
//! class is empty). Entry 0 always equals `m`. The array determines the
//! semigroup completely: `x` belongs exactly when `x` is 0 or at least the
//! head of its class.

use std::fmt;

use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::gapset::Gapset;

/// Per-residue minima of a sub-semigroup of ℕ₀.
///
/// Structural invariants enforced at construction: the array is non-empty,
/// entry 0 equals the length `m`, and every finite entry is positive and
/// congruent to its index mod `m`. Entries below `m` are permitted so that
/// re-based representations over a larger modulus (whose class minima can be
/// small) fit the same type; operations that additionally need the standard
/// form (all finite entries at least `m`) say so and fail otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeadSet {
    heads: Vec<ExtNat>,
}

impl HeadSet {
    /// Validates and wraps a head array.
    pub fn new(heads: Vec<ExtNat>) -> Result<Self> {
        if heads.is_empty() {
            return Err(Error::MalformedHeadSet("empty head array".into()));
        }
        let m = heads.len() as u64;
        if heads[0] != ExtNat::Fin(m) {
            return Err(Error::MalformedHeadSet(format!(
                "entry 0 is {} but must equal the modulus {m}",
                heads[0]
            )));
        }
        for (i, &h) in heads.iter().enumerate() {
            if let ExtNat::Fin(v) = h {
                if v == 0 {
                    return Err(Error::MalformedHeadSet(format!(
                        "entry {i} is 0; heads are positive"
                    )));
                }
                if v % m != i as u64 {
                    return Err(Error::MalformedHeadSet(format!(
                        "entry {i} is {v}, which is not congruent to {i} mod {m}"
                    )));
                }
            }
        }
        Ok(Self { heads })
    }

    /// Convenience constructor for all-finite arrays.
    pub fn from_finite(heads: &[u64]) -> Result<Self> {
        Self::new(heads.iter().copied().map(ExtNat::Fin).collect())
    }

    /// The modulus `m` (array length, also the value of entry 0).
    pub fn modulus(&self) -> u64 {
        self.heads.len() as u64
    }

    /// The head array.
    pub fn heads(&self) -> &[ExtNat] {
        &self.heads
    }

    /// True when no residue class is empty.
    pub fn all_finite(&self) -> bool {
        self.heads.iter().all(|h| h.is_finite())
    }

    /// Errors with the first empty class when one exists.
    pub(crate) fn require_all_finite(&self) -> Result<()> {
        match self.heads.iter().position(|h| !h.is_finite()) {
            None => Ok(()),
            Some(i) => Err(Error::InfiniteGapset { class: i as u64 }),
        }
    }

    /// True when every finite entry is at least the modulus, i.e. the array
    /// is the standard basis of the semigroup it represents rather than a
    /// re-based representation over a larger modulus.
    pub fn is_standard(&self) -> bool {
        let m = self.modulus();
        self.heads
            .iter()
            .all(|h| h.finite().map_or(true, |v| v >= m))
    }

    /// Greatest common divisor of the finite heads.
    ///
    /// The represented sub-semigroup is generated by the finite heads, so
    /// this is the gcd of all its elements.
    pub fn gcd(&self) -> u64 {
        self.heads
            .iter()
            .filter_map(|h| h.finite())
            .fold(0, num_integer::gcd)
    }

    /// Largest finite head (at least `m`, which is always finite).
    pub fn max_finite_head(&self) -> u64 {
        self.heads
            .iter()
            .filter_map(|h| h.finite())
            .max()
            .expect("entry 0 is always finite")
    }

    /// Membership: `x` is 0 or at least the head of its residue class.
    pub fn contains(&self, x: u64) -> bool {
        self.contains_wide(x as u128)
    }

    /// Membership for sums that may exceed the 64-bit range.
    fn contains_wide(&self, x: u128) -> bool {
        if x == 0 {
            return true;
        }
        let m = self.modulus() as u128;
        match self.heads[(x % m) as usize] {
            ExtNat::Fin(h) => x >= h as u128,
            ExtNat::Inf => false,
        }
    }

    /// The complement of the represented semigroup, ascending.
    ///
    /// Each class contributes the initial segment of its residue class lying
    /// strictly below the head. Fails when some class is empty (the
    /// complement would be infinite).
    pub fn gapset(&self) -> Result<Gapset> {
        self.require_all_finite()?;
        let m = self.modulus();
        let mut gaps = Vec::new();
        for i in 1..m {
            let head = self.heads[i as usize].finite().expect("checked finite");
            let mut x = i;
            while x < head {
                gaps.push(x);
                x += m;
            }
        }
        gaps.sort_unstable();
        Ok(Gapset::from_sorted_unchecked(gaps))
    }

    /// Number of gaps, computed from the head sum.
    ///
    /// The sum of the nonzero-class heads equals `genus·m + m(m−1)/2`, so the
    /// genus falls out by rearrangement without expanding the gapset.
    pub fn genus(&self) -> Result<u64> {
        self.require_all_finite()?;
        let m = self.modulus() as u128;
        let sum: u128 = self.heads[1..]
            .iter()
            .map(|h| h.finite().expect("checked finite") as u128)
            .sum();
        let triangular = m * (m - 1) / 2;
        debug_assert!(sum >= triangular && (sum - triangular) % m == 0);
        Ok(((sum - triangular) / m) as u64)
    }

    /// Largest gap; −1 when there are no gaps at all.
    pub fn frobenius(&self) -> Result<i64> {
        self.require_all_finite()?;
        if self.genus()? == 0 {
            return Ok(-1);
        }
        let f = self.max_finite_head() - self.modulus();
        i64::try_from(f).map_err(|_| Error::Overflow)
    }

    /// Gaps `x` such that `x` plus any nonzero semigroup element lands in
    /// the semigroup; equivalently the maximal gaps under the partial order
    /// "differs by a semigroup element".
    ///
    /// Requires the standard form: the candidates are exactly the heads
    /// shifted down by `m`, which presupposes that the heads are the class
    /// minima of the represented semigroup.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        self.require_all_finite()?;
        if !self.is_standard() {
            return Err(Error::MalformedHeadSet(
                "pseudo-Frobenius computation needs a standard head set".into(),
            ));
        }
        let m = self.modulus();
        if m == 1 {
            return Ok(Vec::new());
        }
        let candidates: Vec<u64> = (1..m)
            .map(|i| self.heads[i as usize].finite().expect("checked finite") - m)
            .collect();
        let mut result: Vec<u64> = candidates
            .iter()
            .copied()
            .filter(|&x| {
                !candidates
                    .iter()
                    .any(|&y| y > x && self.contains(y - x))
            })
            .collect();
        result.sort_unstable();
        Ok(result)
    }

    /// Residue classes that lie entirely inside the complement and stay there
    /// under addition of any semigroup element.
    ///
    /// Nonempty exactly when some class is empty (infinite complement); the
    /// full classes returned here are the whole answer because the property
    /// is invariant under adding `m`.
    pub fn pf_star_classes(&self) -> Vec<u64> {
        let m = self.modulus();
        (1..m)
            .filter(|&i| {
                (0..m).all(|j| {
                    !self.heads[j as usize].is_finite()
                        || !self.heads[((i + j) % m) as usize].is_finite()
                })
            })
            .collect()
    }

    /// Definitional pseudo-Frobenius search for possibly non-numerical
    /// sub-semigroups, restricted to values up to `bound`.
    ///
    /// Returns every `x ≤ bound` outside the semigroup such that `x` plus
    /// each finite head lands inside. Adding a head and then multiples of
    /// `m` stays inside, so checking the heads covers every nonzero element.
    /// The bound must cover the largest finite head so the reported window
    /// is meaningful.
    pub fn pf_within(&self, bound: u64) -> Result<Vec<u64>> {
        let required = self.max_finite_head();
        if bound < required {
            return Err(Error::InvalidBound { bound, required });
        }
        let m = self.modulus();
        let d = self.gcd();
        let mut result = Vec::new();
        for x in 1..=bound {
            if self.contains(x) {
                continue;
            }
            let closes = (0..m).all(|j| match self.heads[j as usize] {
                ExtNat::Fin(h) => self.contains_wide(x as u128 + h as u128),
                ExtNat::Inf => true,
            });
            if closes {
                debug_assert_eq!(x % d, 0, "pseudo-Frobenius values are gcd multiples");
                result.push(x);
            }
        }
        Ok(result)
    }

    /// Re-expresses the same sub-semigroup by class minima over modulus `k`.
    ///
    /// `k` must itself be an element (so the new entry 0 can equal `k`) and
    /// at least the current modulus; every class must be finite so that the
    /// scan below provably covers all class minima.
    pub fn rebase(&self, k: u64) -> Result<HeadSet> {
        self.require_all_finite()?;
        if !self.contains(k) {
            return Err(Error::NotAMember { value: k });
        }
        let m = self.modulus();
        if k < m {
            return Err(Error::InvalidModulus(k));
        }
        if k == m {
            return Ok(self.clone());
        }
        // Elements of the represented semigroup are head + t·m. Residues
        // mod k of such a progression repeat with period at most k, so
        // t = 0..=k per head reaches a minimum of every reachable class.
        let mut best: Vec<Option<u64>> = vec![None; k as usize];
        for i in 0..m {
            let h = self.heads[i as usize].finite().expect("checked finite");
            for t in 0..=k {
                let v = t
                    .checked_mul(m)
                    .and_then(|tm| h.checked_add(tm))
                    .ok_or(Error::Overflow)?;
                let r = (v % k) as usize;
                if best[r].map_or(true, |cur| v < cur) {
                    best[r] = Some(v);
                }
            }
        }
        let heads: Vec<ExtNat> = best
            .into_iter()
            .enumerate()
            .map(|(r, v)| {
                v.map(ExtNat::Fin).ok_or_else(|| {
                    Error::Internal(format!("rebase left residue class {r} uncovered"))
                })
            })
            .collect::<Result<_>>()?;
        HeadSet::new(heads)
    }
}

impl fmt::Display for HeadSet {
    /// Bracketed, comma-separated heads: `[6, 55, 38, 51, 34, 17]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, h) in self.heads.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(values: &[i64]) -> HeadSet {
        let heads = values
            .iter()
            .map(|&v| if v < 0 { ExtNat::Inf } else { ExtNat::Fin(v as u64) })
            .collect();
        HeadSet::new(heads).unwrap()
    }

    #[test]
    fn construction_validates_structure() {
        assert!(HeadSet::new(vec![]).is_err());
        // Entry 0 must equal the modulus.
        assert!(HeadSet::from_finite(&[4, 5, 6, 7, 8]).is_err());
        // Residue mismatch: 9 ≡ 0 mod 3.
        assert!(HeadSet::from_finite(&[3, 9, 5]).is_err());
        // Entries below the modulus are allowed when residues match.
        assert!(HeadSet::from_finite(&[4, 5, 2, 3]).is_ok());
    }

    #[test]
    fn membership_follows_class_heads() {
        let s = h(&[6, 55, 38, 51, 34, 17]);
        assert!(s.contains(0));
        assert!(s.contains(17));
        assert!(s.contains(6));
        assert!(s.contains(55));
        assert!(!s.contains(49));
        assert!(!s.contains(11));
        assert!(s.contains(23)); // 17 + 6
    }

    #[test]
    fn gapset_expansion() {
        let g = h(&[3, 7, 8]).gapset().unwrap();
        assert_eq!(g.gaps(), &[1, 2, 4, 5]);

        let g = h(&[2, 3]).gapset().unwrap();
        assert_eq!(g.gaps(), &[1]);

        assert!(matches!(
            h(&[5, -1, 12, -1, 14]).gapset(),
            Err(Error::InfiniteGapset { class: 1 })
        ));
    }

    #[test]
    fn genus_formula_agrees_with_expansion() {
        // The head-sum formula gives 30 here, and counting the expanded
        // gapset must agree; the count is the authority.
        let s = h(&[6, 55, 38, 51, 34, 17]);
        assert_eq!(s.genus().unwrap(), 30);
        assert_eq!(s.gapset().unwrap().genus(), 30);

        assert_eq!(h(&[3, 7, 8]).genus().unwrap(), 4);
        assert_eq!(h(&[1]).genus().unwrap(), 0);
    }

    #[test]
    fn frobenius_values() {
        assert_eq!(h(&[6, 55, 38, 51, 34, 17]).frobenius().unwrap(), 49);
        assert_eq!(h(&[5, 21, 7, 28, 14]).frobenius().unwrap(), 23);
        assert_eq!(h(&[1]).frobenius().unwrap(), -1);
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(
            h(&[6, 55, 38, 51, 34, 17]).pseudo_frobenius().unwrap(),
            vec![45, 49]
        );
        assert_eq!(h(&[2, 3]).pseudo_frobenius().unwrap(), vec![1]);
        assert_eq!(h(&[5, 21, 7, 28, 14]).pseudo_frobenius().unwrap(), vec![23]);
        assert_eq!(h(&[1]).pseudo_frobenius().unwrap(), Vec::<u64>::new());
        // Re-based representations are rejected: their heads are not the
        // class minima shifted by the modulus.
        assert!(h(&[4, 5, 2, 3]).pseudo_frobenius().is_err());
    }

    #[test]
    fn pf_star_class_examples() {
        let even = h(&[10, -1, 12, -1, 14, -1, 16, -1, 18, -1]);
        assert_eq!(even.pf_star_classes(), vec![1, 3, 5, 7, 9]);

        assert_eq!(
            h(&[6, 55, 38, 51, 34, 17]).pf_star_classes(),
            Vec::<u64>::new()
        );

        assert_eq!(h(&[4, -1, -1, -1]).pf_star_classes(), vec![1, 2, 3]);
    }

    #[test]
    fn pf_within_examples() {
        let even = h(&[10, -1, 12, -1, 14, -1, 16, -1, 18, -1]);
        assert_eq!(even.pf_within(60).unwrap(), vec![2, 4, 6, 8]);
        assert!(matches!(
            even.pf_within(17),
            Err(Error::InvalidBound { bound: 17, required: 18 })
        ));

        assert_eq!(h(&[4, -1, -1, -1]).pf_within(40).unwrap(), Vec::<u64>::new());

        let s = h(&[6, 55, 38, 51, 34, 17]);
        assert_eq!(s.pf_within(55).unwrap(), s.pseudo_frobenius().unwrap());
    }

    #[test]
    fn rebase_examples() {
        let s = h(&[4, 5, 10, 7]);
        assert_eq!(s.rebase(5).unwrap().to_string(), "[5, 11, 7, 8, 4]");
        assert_eq!(s.rebase(4).unwrap(), s);

        let r = h(&[2, 3]).rebase(4).unwrap();
        assert_eq!(r.to_string(), "[4, 5, 2, 3]");

        assert!(matches!(
            h(&[2, 3]).rebase(1),
            Err(Error::NotAMember { value: 1 })
        ));
    }

    #[test]
    fn rebase_preserves_membership() {
        let s = h(&[4, 5, 10, 7]);
        let r = s.rebase(7).unwrap();
        for x in 0..200 {
            assert_eq!(s.contains(x), r.contains(x), "disagreement at {x}");
        }
    }

    #[test]
    fn display_renders_infinite_heads() {
        assert_eq!(
            h(&[10, -1, 12, -1, 14, -1, 16, -1, 18, -1]).to_string(),
            "[10, inf, 12, inf, 14, inf, 16, inf, 18, inf]"
        );
    }
}
