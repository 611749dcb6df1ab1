//! C ABI over `vincular`.
//!
//! Permutations and patterns cross the boundary as opaque heap handles that
//! the caller releases with the matching `*_free` function. Every fallible
//! call returns a [`VincStatus`]; on failure a description is available from
//! [`vinc_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`vinc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use vincular::analysis::{self, Check};
use vincular::report::{self, OutputFormat};
use vincular::{bijections, enumeration, statistics, Error, Limits, PermClass, Permutation, VincularPattern};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VincStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed permutation, pattern, class or check name.
    ParseError = 3,
    /// Input outside a map's domain (contains 132, or empty for `psi`).
    Precondition = 4,
    /// `n` above the enumeration ceiling.
    LimitExceeded = 5,
    /// A verification found a counterexample.
    CheckFailed = 6,
    Internal = 7,
}

/// Maps accepted by [`vinc_apply`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VincMap {
    Phi = 0,
    Psi = 1,
    Mu = 2,
    Inverse = 3,
    Reverse = 4,
    Complement = 5,
}

/// Named statistics accepted by [`vinc_statistic`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VincStatistic {
    Des = 0,
    Rlmax = 1,
    Rlmin = 2,
    LastValueMinusOne = 3,
}

/// Opaque permutation handle.
pub struct VincPermutation(Permutation);

/// Opaque vincular pattern handle.
pub struct VincPattern(VincularPattern);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    let c = CString::new(message).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: VincStatus, message: impl Into<String>) -> VincStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> VincStatus {
    match e {
        Error::PermutationSyntax { .. }
        | Error::PatternSyntax { .. }
        | Error::UnknownStatistic(_)
        | Error::InvalidClass(_)
        | Error::UnknownCheck(_)
        | Error::ArityMismatch { .. } => VincStatus::ParseError,
        Error::NotAvoiding { .. } | Error::EmptyPermutation => VincStatus::Precondition,
        Error::LimitExceeded { .. } => VincStatus::LimitExceeded,
        Error::Internal(_) => VincStatus::Internal,
    }
}

fn from_error(e: Error) -> VincStatus {
    let status = status_of(&e);
    fail(status, e.to_string())
}

/// # Safety
/// `text` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, VincStatus> {
    if text.is_null() {
        return Err(fail(VincStatus::NullPointer, "string argument is NULL"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(VincStatus::InvalidUtf8, e.to_string()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! non_null {
    ($p:expr, $name:literal) => {
        if $p.is_null() {
            return fail(VincStatus::NullPointer, concat!($name, " is NULL"));
        }
    };
}

/// Description of the most recent failure on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn vinc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vinc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `425163`, `4,2,5,1,6,3`, `""` or `ε`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_permutation_parse(text: *const c_char, out: *mut *mut VincPermutation) -> VincStatus {
    non_null!(out, "out");
    let text = try_status!(read_str(text));
    match Permutation::parse(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(VincPermutation(p)));
            VincStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Builds a permutation from `len` one-line values.
///
/// # Safety
/// `values` must point to `len` readable `uint32_t` (may be NULL when `len`
/// is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_permutation_from_values(
    values: *const u32,
    len: usize,
    out: *mut *mut VincPermutation,
) -> VincStatus {
    non_null!(out, "out");
    let slice: &[u32] = if len == 0 {
        &[]
    } else {
        non_null!(values, "values");
        std::slice::from_raw_parts(values, len)
    };
    match Permutation::from_values(slice.iter().map(|&v| v as usize).collect()) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(VincPermutation(p)));
            VincStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Releases a permutation handle. NULL is ignored.
///
/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vinc_permutation_free(p: *mut VincPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length `n`; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vinc_permutation_len(p: *const VincPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies up to `cap` values into `buf` and returns the full length.
///
/// # Safety
/// `p` must be a live handle; `buf` must have room for `cap` values (may be
/// NULL when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn vinc_permutation_values(p: *const VincPermutation, buf: *mut u32, cap: usize) -> usize {
    let Some(p) = p.as_ref() else { return 0 };
    if !buf.is_null() {
        for (i, &v) in p.0.values().iter().take(cap).enumerate() {
            *buf.add(i) = v as u32;
        }
    }
    p.0.len()
}

/// Text form (digits for n <= 9, commas otherwise); free with
/// [`vinc_string_free`]. NULL on a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vinc_permutation_to_string(p: *const VincPermutation) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.to_string()))
}

/// Parses dash notation such as `2-31`, `[2-13` or `1-2]`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_pattern_parse(text: *const c_char, out: *mut *mut VincPattern) -> VincStatus {
    non_null!(out, "out");
    let text = try_status!(read_str(text));
    match VincularPattern::parse(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(VincPattern(p)));
            VincStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Releases a pattern handle. NULL is ignored.
///
/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vinc_pattern_free(p: *mut VincPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical dash notation; free with [`vinc_string_free`].
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vinc_pattern_to_string(p: *const VincPattern) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.to_string()))
}

/// Number of occurrences of `pattern` in `host`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_count_occurrences(
    pattern: *const VincPattern,
    host: *const VincPermutation,
    out: *mut u64,
) -> VincStatus {
    non_null!(pattern, "pattern");
    non_null!(host, "host");
    non_null!(out, "out");
    *out = (*pattern).0.count(&(*host).0);
    VincStatus::Ok
}

/// Evaluates a named statistic.
///
/// # Safety
/// `p` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_statistic(kind: VincStatistic, p: *const VincPermutation, out: *mut u64) -> VincStatus {
    non_null!(p, "permutation");
    non_null!(out, "out");
    let p = &(*p).0;
    *out = match kind {
        VincStatistic::Des => statistics::des(p),
        VincStatistic::Rlmax => statistics::rlmax(p),
        VincStatistic::Rlmin => statistics::rlmin(p),
        VincStatistic::LastValueMinusOne => statistics::last_value_minus_one(p),
    };
    VincStatus::Ok
}

/// True in `out` iff `p` has no classical occurrence of `pattern`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_avoids(
    p: *const VincPermutation,
    pattern: *const VincPermutation,
    out: *mut bool,
) -> VincStatus {
    non_null!(p, "permutation");
    non_null!(pattern, "pattern");
    non_null!(out, "out");
    *out = (*p).0.avoids(&(*pattern).0);
    VincStatus::Ok
}

/// Applies a map and stores a new handle in `out`. `phi`, `psi` and `mu`
/// return `VINC_STATUS_PRECONDITION` on inputs containing 132.
///
/// # Safety
/// `p` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_apply(
    map: VincMap,
    p: *const VincPermutation,
    out: *mut *mut VincPermutation,
) -> VincStatus {
    non_null!(p, "permutation");
    non_null!(out, "out");
    let p = &(*p).0;
    let image = match map {
        VincMap::Phi => bijections::phi(p),
        VincMap::Psi => bijections::psi(p),
        VincMap::Mu => bijections::mu(p),
        VincMap::Inverse => Ok(p.inverse()),
        VincMap::Reverse => Ok(p.reverse()),
        VincMap::Complement => Ok(p.complement()),
    };
    match image {
        Ok(q) => {
            *out = Box::into_raw(Box::new(VincPermutation(q)));
            VincStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Size of a class (`"all"` or a length-3 pattern such as `"132"`) at `n`.
///
/// # Safety
/// `class` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_class_size(class: *const c_char, n: usize, out: *mut u64) -> VincStatus {
    non_null!(out, "out");
    let text = try_status!(read_str(class));
    let class: PermClass = match text.parse() {
        Ok(c) => c,
        Err(e) => return from_error(e),
    };
    match enumeration::enumerate(class, n, &Limits::from_env()) {
        Ok(perms) => {
            *out = perms.len() as u64;
            VincStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Runs a named check (`theorem1`, ..., `bona`) for every n up to `n_max`.
/// Returns `VINC_STATUS_CHECK_FAILED` with the counterexample as the error
/// message if one is found.
///
/// # Safety
/// `name` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn vinc_verify(name: *const c_char, n_max: usize) -> VincStatus {
    let name = try_status!(read_str(name));
    let check: Check = match name.parse() {
        Ok(c) => c,
        Err(e) => return from_error(e),
    };
    match analysis::verify_theorem(check, n_max, &Limits::from_env()) {
        Ok(report) => match report.first_failure() {
            None => VincStatus::Ok,
            Some(row) => fail(
                VincStatus::CheckFailed,
                format!(
                    "{check} fails at n = {}: {}",
                    row.n,
                    row.counterexample.as_deref().unwrap_or("")
                ),
            ),
        },
        Err(e) => from_error(e),
    }
}

/// Runs the proper-pattern search and stores its JSON report in `out`
/// (free with [`vinc_string_free`]).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vinc_search_json(n_max: usize, modulo_symmetry: bool, out: *mut *mut c_char) -> VincStatus {
    non_null!(out, "out");
    match analysis::search_equidistributed(n_max, modulo_symmetry, &Limits::from_env()) {
        Ok(report) => {
            *out = into_c_string(report::render_search(OutputFormat::Json, &report));
            VincStatus::Ok
        }
        Err(e) => from_error(e),
    }
}
