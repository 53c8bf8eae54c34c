//! C ABI for `wreathgen`.
//!
//! Objects are opaque handles created by `wg_*_new`/`wg_*_parse` style calls
//! and released with the matching `wg_*_free`. Every fallible call returns a
//! [`WgStatus`]; on failure a message is available from [`wg_last_error`] on
//! the same thread until the next failing call. Points are 1-based.
//!
//! Strings are copied out through `(buf, len, needed)`: `needed` receives the
//! length including the terminating NUL, and if `len` is smaller the call
//! returns [`WgStatus::BufferTooSmall`] without writing.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wreathgen::constructions::{
    classic_generators, two_generators, ConstructionError, GeneratingSet, LemmaCase,
};
use wreathgen::groups::{Bsgs, GroupSpec};
use wreathgen::perm::Permutation;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DegreeMismatch = 4,
    InvalidArgument = 5,
    Excluded = 6,
    BufferTooSmall = 7,
    Overflow = 8,
    Panic = 9,
}

/// A permutation.
pub struct WgPermutation(Permutation);

/// A base and strong generating set.
pub struct WgBsgs(Bsgs);

/// A generating set of a wreath product.
pub struct WgGeneratingSet(GeneratingSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: WgStatus, message: impl ToString) -> WgStatus {
    set_error(message);
    status
}

/// Runs `f`, turning panics into [`WgStatus::Panic`].
fn guard(f: impl FnOnce() -> WgStatus) -> WgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(WgStatus::Panic, "internal panic"),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, WgStatus> {
    if s.is_null() {
        return Err(fail(WgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(WgStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_string(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> WgStatus {
    let n = s.len() + 1;
    if !needed.is_null() {
        *needed = n;
    }
    if buf.is_null() || len < n {
        return fail(WgStatus::BufferTooSmall, format!("buffer needs {n} bytes"));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    WgStatus::Ok
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(WgStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

/// The message of the last failing call on this thread, or NULL. The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn wg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses cycle notation such as `(1,2,3)(4,5)` at the given degree.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_parse(
    text: *const c_char,
    degree: usize,
    out: *mut *mut WgPermutation,
) -> WgStatus {
    guard(|| {
        non_null!(out);
        let t = match c_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Permutation::parse_cycles(t, degree) {
            Ok(p) => {
                store(out, WgPermutation(p));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::Parse, e),
        }
    })
}

/// Builds a permutation from its 1-based image list `images[0..degree]`.
///
/// # Safety
/// `images` must point to `degree` readable values and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_from_images(
    images: *const u32,
    degree: usize,
    out: *mut *mut WgPermutation,
) -> WgStatus {
    guard(|| {
        non_null!(images, out);
        let list: Vec<usize> = std::slice::from_raw_parts(images, degree)
            .iter()
            .map(|&x| x as usize)
            .collect();
        match Permutation::from_images(&list) {
            Ok(p) => {
                store(out, WgPermutation(p));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::InvalidArgument, e),
        }
    })
}

/// `a` followed by `b`.
///
/// # Safety
/// All pointers must be valid; `a` and `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_compose(
    a: *const WgPermutation,
    b: *const WgPermutation,
    out: *mut *mut WgPermutation,
) -> WgStatus {
    guard(|| {
        non_null!(a, b, out);
        match (*a).0.compose(&(*b).0) {
            Ok(p) => {
                store(out, WgPermutation(p));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::DegreeMismatch, e),
        }
    })
}

/// # Safety
/// `a` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_inverse(
    a: *const WgPermutation,
    out: *mut *mut WgPermutation,
) -> WgStatus {
    guard(|| {
        non_null!(a, out);
        store(out, WgPermutation((*a).0.inverse()));
        WgStatus::Ok
    })
}

/// Degree of `a`, or 0 for NULL.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_degree(a: *const WgPermutation) -> usize {
    a.as_ref().map_or(0, |p| p.0.degree())
}

/// Image of the 1-based `point`, or 0 when `a` is NULL or `point` is out of range.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_image(a: *const WgPermutation, point: usize) -> usize {
    match a.as_ref() {
        Some(p) if (1..=p.0.degree()).contains(&point) => p.0.image(point),
        _ => 0,
    }
}

/// Element order; fails with `Overflow` if it does not fit in 64 bits.
///
/// # Safety
/// `a` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_order(a: *const WgPermutation, out: *mut u64) -> WgStatus {
    guard(|| {
        non_null!(a, out);
        match u64::try_from((*a).0.order()) {
            Ok(n) => {
                *out = n;
                WgStatus::Ok
            }
            Err(_) => fail(WgStatus::Overflow, "order exceeds 64 bits"),
        }
    })
}

/// Canonical cycle notation of `a`.
///
/// # Safety
/// `a` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_to_string(
    a: *const WgPermutation,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> WgStatus {
    guard(|| {
        non_null!(a);
        write_string(&(*a).0.to_string(), buf, len, needed)
    })
}

/// # Safety
/// `a` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wg_perm_free(a: *mut WgPermutation) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Runs Schreier-Sims on `count` generators of the given degree.
///
/// # Safety
/// `gens` must point to `count` live handles (it may be NULL when `count` is 0).
#[no_mangle]
pub unsafe extern "C" fn wg_bsgs_new(
    gens: *const *const WgPermutation,
    count: usize,
    degree: usize,
    out: *mut *mut WgBsgs,
) -> WgStatus {
    guard(|| {
        non_null!(out);
        let mut list = Vec::with_capacity(count);
        if count > 0 {
            non_null!(gens);
            for &g in std::slice::from_raw_parts(gens, count) {
                non_null!(g);
                list.push((*g).0.clone());
            }
        }
        match Bsgs::new(degree, &list) {
            Ok(b) => {
                store(out, WgBsgs(b));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::DegreeMismatch, e),
        }
    })
}

/// Group order in decimal.
///
/// # Safety
/// `b` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn wg_bsgs_order(
    b: *const WgBsgs,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> WgStatus {
    guard(|| {
        non_null!(b);
        write_string(&(*b).0.order().to_string(), buf, len, needed)
    })
}

/// Membership test.
///
/// # Safety
/// `b` and `a` must be live handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_bsgs_contains(
    b: *const WgBsgs,
    a: *const WgPermutation,
    out: *mut bool,
) -> WgStatus {
    guard(|| {
        non_null!(b, a, out);
        *out = (*b).0.contains(&(*a).0);
        WgStatus::Ok
    })
}

/// The base and strong generators as JSON.
///
/// # Safety
/// `b` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn wg_bsgs_to_json(
    b: *const WgBsgs,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> WgStatus {
    guard(|| {
        non_null!(b);
        match serde_json::to_string(&(*b).0.to_json()) {
            Ok(s) => write_string(&s, buf, len, needed),
            Err(e) => fail(WgStatus::InvalidArgument, e),
        }
    })
}

/// # Safety
/// `b` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wg_bsgs_free(b: *mut WgBsgs) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

fn spec(s: &str) -> Result<GroupSpec, WgStatus> {
    s.parse().map_err(|e| fail(WgStatus::Parse, e))
}

/// A minimal generating set of `base wr top`, each given as `S:n` or `A:n`.
///
/// # Safety
/// `base` and `top` must be NUL-terminated strings and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_gens_new(
    base: *const c_char,
    top: *const c_char,
    out: *mut *mut WgGeneratingSet,
) -> WgStatus {
    guard(|| {
        non_null!(out);
        let parsed = c_str(base)
            .and_then(spec)
            .and_then(|g| Ok((g, c_str(top).and_then(spec)?)));
        let (g, s) = match parsed {
            Ok(x) => x,
            Err(status) => return status,
        };
        match two_generators(&g, &s) {
            Ok(set) => {
                store(out, WgGeneratingSet(set));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::InvalidArgument, e),
        }
    })
}

/// Number of elements in the set (1 or 2), or 0 for NULL.
///
/// # Safety
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wg_gens_len(set: *const WgGeneratingSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.elements.len())
}

/// Element `index` (0-based) in the imprimitive action of degree `m n`.
///
/// # Safety
/// `set` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_gens_embedded(
    set: *const WgGeneratingSet,
    index: usize,
    out: *mut *mut WgPermutation,
) -> WgStatus {
    guard(|| {
        non_null!(set, out);
        let set = &*set;
        match set.0.elements.get(index) {
            Some(e) => {
                store(out, WgPermutation(e.embed()));
                WgStatus::Ok
            }
            None => fail(
                WgStatus::InvalidArgument,
                format!("index {index} out of range"),
            ),
        }
    })
}

/// Whether the set generates a group of order `|G|^n |S|`.
///
/// # Safety
/// `set` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_gens_verify(set: *const WgGeneratingSet, out: *mut bool) -> WgStatus {
    guard(|| {
        non_null!(set, out);
        let s = &(*set).0;
        *out = s.generated_order() == s.shape.order();
        WgStatus::Ok
    })
}

/// Provenance tag of the construction, e.g. `special-pair`.
///
/// # Safety
/// `set` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn wg_gens_provenance(
    set: *const WgGeneratingSet,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> WgStatus {
    guard(|| {
        non_null!(set);
        write_string(&(*set).0.provenance.to_string(), buf, len, needed)
    })
}

/// # Safety
/// `set` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wg_gens_free(set: *mut WgGeneratingSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Checks a classical generating set by its case id (for example `L2.5-1`)
/// at degree `n`. Excluded degrees give [`WgStatus::Excluded`].
///
/// # Safety
/// `case_id` must be a NUL-terminated string and `matches` valid.
#[no_mangle]
pub unsafe extern "C" fn wg_verify_lemma(
    case_id: *const c_char,
    n: usize,
    matches: *mut bool,
) -> WgStatus {
    guard(|| {
        non_null!(matches);
        let case: LemmaCase =
            match c_str(case_id).and_then(|t| t.parse().map_err(|e| fail(WgStatus::Parse, e))) {
                Ok(c) => c,
                Err(s) => return s,
            };
        match classic_generators(case, n) {
            Ok((gens, expected)) => match Bsgs::new(n, &gens) {
                Ok(b) => {
                    *matches = b.order() == expected.order();
                    WgStatus::Ok
                }
                Err(e) => fail(WgStatus::InvalidArgument, e),
            },
            Err(e @ ConstructionError::Excluded { .. }) => fail(WgStatus::Excluded, e),
            Err(e) => fail(WgStatus::InvalidArgument, e),
        }
    })
}
