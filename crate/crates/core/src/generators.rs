//! Validated generating sets for additive sub-semigroups of the
//! non-negative integers.

use crate::error::{Error, Result};

/// A finite, strictly ascending, duplicate-free list of positive generators.
///
/// The represented structure is the set of all finite sums of generators
/// (including the empty sum 0). It is a numerical semigroup exactly when
/// [`gcd`](Self::gcd) is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    elements: Vec<u64>,
}

impl GeneratorSet {
    /// Normalizes raw input: drops zeros (the identity generates nothing),
    /// removes duplicates, and sorts ascending.
    pub fn new(raw: &[u64]) -> Result<Self> {
        let mut elements: Vec<u64> = raw.iter().copied().filter(|&x| x > 0).collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        Ok(Self { elements })
    }

    /// The normalized generators, strictly ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Least positive element of the generated sub-semigroup.
    pub fn multiplicity(&self) -> u64 {
        self.elements[0]
    }

    /// Greatest common divisor of all generators.
    pub fn gcd(&self) -> u64 {
        self.elements
            .iter()
            .fold(0, |acc, &x| num_integer::gcd(acc, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_order_and_duplicates() {
        let gen = GeneratorSet::new(&[38, 17, 6, 17]).unwrap();
        assert_eq!(gen.elements(), &[6, 17, 38]);
        assert_eq!(gen.multiplicity(), 6);
    }

    #[test]
    fn drops_zeros() {
        let gen = GeneratorSet::new(&[0, 5, 7]).unwrap();
        assert_eq!(gen.elements(), &[5, 7]);
    }

    #[test]
    fn rejects_all_zero_input() {
        assert!(matches!(
            GeneratorSet::new(&[0, 0]),
            Err(Error::EmptyGeneratorSet)
        ));
        assert!(matches!(GeneratorSet::new(&[]), Err(Error::EmptyGeneratorSet)));
    }

    #[test]
    fn gcd_detects_numerical_and_non_numerical_sets() {
        assert_eq!(GeneratorSet::new(&[6, 17, 38]).unwrap().gcd(), 1);
        assert_eq!(GeneratorSet::new(&[10, 12, 14, 16, 18]).unwrap().gcd(), 2);
        assert_eq!(GeneratorSet::new(&[4]).unwrap().gcd(), 4);
    }
}
