//! C ABI for the gapset library.
//!
//! Conventions:
//! - Every fallible call returns a [`GsStatus`]; results travel through
//!   out-pointers, which are written only when the status is OK.
//! - Infinite values cross the boundary as [`GS_INF`] (`UINT64_MAX`).
//! - Handles are opaque; release each with its `_free` function exactly
//!   once. `_free` accepts null; every other entry point treats null as
//!   invalid input (status calls) or returns 0/false (plain accessors).
//! - Array results use a two-call pattern: pass a null buffer to learn the
//!   required length, then call again with a buffer at least that large.

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use gapset::check::is_gapset;
use gapset::extension::{count_table, CountTable, EnumConfig, DEFAULT_NODE_CAP};
use gapset::stdbasis::standard_basis;
use gapset::{Error, ExtNat, GeneratorSet, HeadSet};

/// Result of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsStatus {
    /// Success.
    Ok = 0,
    /// A pointer, length, or value argument was unusable.
    InvalidInput = 1,
    /// A configured resource bound was exceeded.
    ResourceLimit = 2,
    /// An operating-system I/O failure.
    IoError = 3,
    /// An internal invariant failed; report as a bug.
    InternalError = 4,
}

/// Sentinel representing an infinite value in `uint64_t` results.
pub const GS_INF: u64 = u64::MAX;

/// A head set: one least member per residue class modulo the multiplicity.
pub struct GsHeadSet {
    inner: HeadSet,
}

/// Gapset counts by multiplicity and genus.
pub struct GsCountTable {
    inner: CountTable,
}

fn status_of(e: &Error) -> GsStatus {
    match e {
        Error::ResourceLimit(_) => GsStatus::ResourceLimit,
        Error::Io(_) => GsStatus::IoError,
        Error::Internal(_) => GsStatus::InternalError,
        _ => GsStatus::InvalidInput,
    }
}

fn guarded(f: impl FnOnce() -> GsStatus) -> GsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => GsStatus::InternalError,
    }
}

/// Treats `(ptr, len)` as a borrowed array; a null pointer is only legal
/// for an empty array.
unsafe fn borrow_u64s<'a>(ptr: *const u64, len: usize) -> Option<&'a [u64]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(slice::from_raw_parts(ptr, len))
    }
}

/// Computes the standard basis of the monoid generated by
/// `generators[0..len]` and stores a new handle in `*out`.
///
/// Fails with invalid input when the list is empty, all zero, or null.
#[no_mangle]
pub unsafe extern "C" fn gs_std_basis(
    generators: *const u64,
    len: usize,
    out: *mut *mut GsHeadSet,
) -> GsStatus {
    if out.is_null() {
        return GsStatus::InvalidInput;
    }
    let Some(raw) = borrow_u64s(generators, len) else {
        return GsStatus::InvalidInput;
    };
    guarded(|| {
        let result = GeneratorSet::new(raw).and_then(|gens| standard_basis(&gens));
        match result {
            Ok(basis) => {
                *out = Box::into_raw(Box::new(GsHeadSet { inner: basis }));
                GsStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a head set handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gs_headset_free(h: *mut GsHeadSet) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// The multiplicity (modulus) of the head set, or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn gs_headset_modulus(h: *const GsHeadSet) -> u64 {
    match h.as_ref() {
        Some(h) => h.inner.modulus(),
        None => 0,
    }
}

/// Copies all heads into `buf[0..buf_len]`, one per residue class; empty
/// classes are written as [`GS_INF`]. `buf_len` must be at least the
/// modulus.
#[no_mangle]
pub unsafe extern "C" fn gs_headset_heads(
    h: *const GsHeadSet,
    buf: *mut u64,
    buf_len: usize,
) -> GsStatus {
    let Some(h) = h.as_ref() else {
        return GsStatus::InvalidInput;
    };
    let heads = h.inner.heads();
    if buf.is_null() || buf_len < heads.len() {
        return GsStatus::InvalidInput;
    }
    let out = slice::from_raw_parts_mut(buf, heads.len());
    for (slot, head) in out.iter_mut().zip(heads) {
        *slot = match head {
            ExtNat::Fin(v) => *v,
            ExtNat::Inf => GS_INF,
        };
    }
    GsStatus::Ok
}

/// True when `value` belongs to the monoid. Null yields false.
#[no_mangle]
pub unsafe extern "C" fn gs_headset_contains(h: *const GsHeadSet, value: u64) -> bool {
    match h.as_ref() {
        Some(h) => h.inner.contains(value),
        None => false,
    }
}

/// Stores the number of gaps in `*out`, or [`GS_INF`] when the gapset is
/// infinite (gcd above 1).
#[no_mangle]
pub unsafe extern "C" fn gs_genus(h: *const GsHeadSet, out: *mut u64) -> GsStatus {
    let Some(h) = h.as_ref() else {
        return GsStatus::InvalidInput;
    };
    if out.is_null() {
        return GsStatus::InvalidInput;
    }
    if !h.inner.all_finite() {
        *out = GS_INF;
        return GsStatus::Ok;
    }
    match h.inner.genus() {
        Ok(g) => {
            *out = g;
            GsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Stores the Frobenius number (largest gap, or −1 when there are no gaps)
/// in `*out`. Fails with invalid input when the gapset is infinite.
#[no_mangle]
pub unsafe extern "C" fn gs_frobenius(h: *const GsHeadSet, out: *mut i64) -> GsStatus {
    let Some(h) = h.as_ref() else {
        return GsStatus::InvalidInput;
    };
    if out.is_null() {
        return GsStatus::InvalidInput;
    }
    match h.inner.frobenius() {
        Ok(f) => {
            *out = f;
            GsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Two-call retrieval of the pseudo-Frobenius elements (finite gapsets
/// only). With a null `buf`, stores the element count in `*written` and
/// returns OK; otherwise copies up to `buf_len` elements and fails if the
/// buffer is too small (the required count is still stored).
#[no_mangle]
pub unsafe extern "C" fn gs_pseudo_frobenius(
    h: *const GsHeadSet,
    buf: *mut u64,
    buf_len: usize,
    written: *mut usize,
) -> GsStatus {
    let Some(h) = h.as_ref() else {
        return GsStatus::InvalidInput;
    };
    if written.is_null() {
        return GsStatus::InvalidInput;
    }
    guarded(|| match h.inner.pseudo_frobenius() {
        Ok(pf) => {
            *written = pf.len();
            if buf.is_null() {
                return GsStatus::Ok;
            }
            if buf_len < pf.len() {
                return GsStatus::InvalidInput;
            }
            slice::from_raw_parts_mut(buf, pf.len()).copy_from_slice(&pf);
            GsStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Decides whether `gaps[0..len]` is the gapset of a numerical semigroup
/// and stores the verdict in `*out`. An empty list is the empty gapset and
/// accepted; any zero in the list is invalid input.
#[no_mangle]
pub unsafe extern "C" fn gs_is_gapset(
    gaps: *const u64,
    len: usize,
    out: *mut bool,
) -> GsStatus {
    if out.is_null() {
        return GsStatus::InvalidInput;
    }
    let Some(set) = borrow_u64s(gaps, len) else {
        return GsStatus::InvalidInput;
    };
    guarded(|| match is_gapset(set) {
        Ok(verdict) => {
            *out = verdict;
            GsStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Counts gapsets by multiplicity and genus for every genus up to `g_max`
/// and stores a new table handle in `*out`. `workers` 0 uses the shared
/// thread pool; `node_cap` 0 uses the default frontier bound.
#[no_mangle]
pub unsafe extern "C" fn gs_count_table(
    g_max: u64,
    workers: usize,
    node_cap: u64,
    out: *mut *mut GsCountTable,
) -> GsStatus {
    if out.is_null() {
        return GsStatus::InvalidInput;
    }
    let cfg = EnumConfig {
        node_cap: if node_cap == 0 {
            DEFAULT_NODE_CAP
        } else {
            node_cap
        },
        workers,
    };
    guarded(|| match count_table(g_max, &cfg) {
        Ok(table) => {
            *out = Box::into_raw(Box::new(GsCountTable { inner: table }));
            GsStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a count table handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gs_count_table_free(t: *mut GsCountTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// The largest genus covered by the table, or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn gs_count_g_max(t: *const GsCountTable) -> u64 {
    match t.as_ref() {
        Some(t) => t.inner.g_max(),
        None => 0,
    }
}

/// Stores the total number of gapsets of genus `g` in `*out`. Fails when
/// `g` exceeds the table's range.
#[no_mangle]
pub unsafe extern "C" fn gs_count_total(
    t: *const GsCountTable,
    g: u64,
    out: *mut u64,
) -> GsStatus {
    let Some(t) = t.as_ref() else {
        return GsStatus::InvalidInput;
    };
    if out.is_null() || g > t.inner.g_max() {
        return GsStatus::InvalidInput;
    }
    *out = t.inner.totals()[g as usize];
    GsStatus::Ok
}

/// Stores the number of gapsets with multiplicity `m` and genus `g` in
/// `*out` (0 for levels that hold no gapset). Fails when `g` exceeds the
/// table's range.
#[no_mangle]
pub unsafe extern "C" fn gs_count_mg(
    t: *const GsCountTable,
    m: u64,
    g: u64,
    out: *mut u64,
) -> GsStatus {
    let Some(t) = t.as_ref() else {
        return GsStatus::InvalidInput;
    };
    if out.is_null() || g > t.inner.g_max() {
        return GsStatus::InvalidInput;
    }
    *out = t.inner.count(m, g).unwrap_or(0);
    GsStatus::Ok
}

/// A static, null-terminated description of a status code.
#[no_mangle]
pub extern "C" fn gs_status_message(status: GsStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        GsStatus::Ok => b"ok\0",
        GsStatus::InvalidInput => b"invalid input\0",
        GsStatus::ResourceLimit => b"resource limit exceeded\0",
        GsStatus::IoError => b"i/o error\0",
        GsStatus::InternalError => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}
