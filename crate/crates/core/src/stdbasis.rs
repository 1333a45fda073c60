//! Standard-basis computation: a fixpoint over per-class generator minima.
//!
//! Starting from the least generator of each residue class (infinity for
//! untouched classes), repeatedly replace a head by any smaller sum of two
//! heads until no replacement applies. The result lists, per class, the least
//! element of the generated sub-semigroup — its standard basis when the
//! generators are coprime.

use crate::error::{Error, Result};
use crate::ext_nat::ExtNat;
use crate::generators::GeneratorSet;
use crate::headset::HeadSet;

/// Memory guard: head tables are dense arrays of length `m`.
pub const MAX_MODULUS: u64 = 1 << 24;

/// One head replacement performed by the fixpoint loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceUpdate {
    /// 1-based index of the pass that performed the replacement.
    pub pass: u64,
    /// First summand class.
    pub i: u64,
    /// Second summand class (`j ≥ i`).
    pub j: u64,
    /// Replaced class, `(i + j) mod m`.
    pub class: u64,
    /// Value before the replacement.
    pub old: ExtNat,
    /// Value after the replacement; always strictly smaller than `old`.
    pub new: ExtNat,
}

/// Replay data for one fixpoint run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixpointTrace {
    /// Number of full passes, including the final quiet one.
    pub iterations: u64,
    /// Replacements in execution order.
    pub updates: Vec<TraceUpdate>,
}

/// Per-class minima of the generators themselves, before any reduction.
///
/// Entry 0 is pinned to the multiplicity; classes containing no generator
/// start at infinity.
pub fn generator_minima(gen: &GeneratorSet) -> Result<HeadSet> {
    let m = gen.multiplicity();
    if m > MAX_MODULUS {
        return Err(Error::ResourceLimit(format!(
            "multiplicity {m} exceeds the supported maximum {MAX_MODULUS}"
        )));
    }
    let mut heads = vec![ExtNat::Inf; m as usize];
    for &s in gen.elements() {
        let class = (s % m) as usize;
        if ExtNat::Fin(s) < heads[class] {
            heads[class] = ExtNat::Fin(s);
        }
    }
    heads[0] = ExtNat::Fin(m);
    HeadSet::new(heads)
}

/// Runs the reduction fixpoint on a head table.
///
/// The input must be standard (finite entries at least the modulus, so entry
/// 0 is the least finite entry). Each pass scans summand pairs in ascending
/// `(i, j)` order with `j ≥ i`; pairs targeting class 0 are skipped because
/// no sum of heads can undercut the modulus pinned there. Every update
/// strictly decreases one entry, which bounds the number of passes.
pub fn reduce_heads(t: &HeadSet) -> Result<(HeadSet, FixpointTrace)> {
    if !t.is_standard() {
        return Err(Error::MalformedHeadSet(
            "reduction needs finite entries of at least the modulus".into(),
        ));
    }
    let m = t.heads().len();
    let mut heads = t.heads().to_vec();
    let mut trace = FixpointTrace::default();

    // Every update lowers an entry by at least 1, so the sum of the initial
    // finite entries bounds the number of productive passes. Exceeding it
    // means the loop is broken, not the input.
    let pass_cap: u128 = heads
        .iter()
        .filter_map(|h| h.finite())
        .map(u128::from)
        .sum::<u128>()
        + 1;

    loop {
        trace.iterations += 1;
        if u128::from(trace.iterations) > pass_cap {
            return Err(Error::Internal(
                "head reduction exceeded its pass bound".into(),
            ));
        }
        let mut changed = false;
        for i in 1..m {
            for j in i..m {
                let (ExtNat::Fin(a), ExtNat::Fin(b)) = (heads[i], heads[j]) else {
                    continue;
                };
                let class = (i + j) % m;
                if class == 0 {
                    continue;
                }
                let sum = a.checked_add(b).ok_or(Error::Overflow)?;
                if ExtNat::Fin(sum) < heads[class] {
                    trace.updates.push(TraceUpdate {
                        pass: trace.iterations,
                        i: i as u64,
                        j: j as u64,
                        class: class as u64,
                        old: heads[class],
                        new: ExtNat::Fin(sum),
                    });
                    heads[class] = ExtNat::Fin(sum);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let reduced = HeadSet::new(heads)?;
    Ok((reduced, trace))
}

/// Standard basis of the sub-semigroup generated by `gen`, with the
/// reduction trace.
pub fn standard_basis_traced(gen: &GeneratorSet) -> Result<(HeadSet, FixpointTrace)> {
    reduce_heads(&generator_minima(gen)?)
}

/// Standard basis of the sub-semigroup generated by `gen`.
///
/// All heads are finite exactly when the generators are coprime; otherwise
/// classes outside the gcd's multiples keep their infinite heads.
pub fn standard_basis(gen: &GeneratorSet) -> Result<HeadSet> {
    standard_basis_traced(gen).map(|(h, _)| h)
}
