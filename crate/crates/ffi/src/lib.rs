//! C interface to `rootint`.
//!
//! Every fallible function returns a [`RootintStatus`]. On failure a message
//! is kept per thread and can be read with [`rootint_last_error`]. Strings
//! handed out by the library are NUL-terminated and must be released with
//! [`rootint_string_free`]; handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rootint::lattice::{smith_normal_form, IntegerMatrix};
use rootint::negativity::rank_one_bound;
use rootint::subsystems::n_sigma;
use rootint::{build_root_system, Error, RootSystem, RootSystemSpec};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootintStatus {
    Ok = 0,
    /// Malformed input, including invalid UTF-8.
    InputError = 1,
    /// A size guard refused the computation.
    CapacityError = 2,
    /// An internal invariant failed or the library panicked.
    InternalError = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
}

/// Opaque handle to a built root system.
pub struct RootintSystem {
    inner: RootSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: RootintStatus, msg: &str) -> RootintStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> RootintStatus {
    let status = match e {
        Error::Input(_) => RootintStatus::InputError,
        Error::Capacity(_) => RootintStatus::CapacityError,
        Error::Internal(_) => RootintStatus::InternalError,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning panics into `InternalError`.
fn guard(f: impl FnOnce() -> RootintStatus) -> RootintStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(RootintStatus::InternalError, "panic in rootint"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, RootintStatus> {
    if p.is_null() {
        return Err(fail(RootintStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(RootintStatus::InputError, "argument is not valid UTF-8"))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

/// Message of the last failure on this thread, or null. Owned by the
/// library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rootint_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rootint_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the root system named by `type_name`, e.g. `"B2"` or `"A1xG2"`.
///
/// # Safety
/// `type_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rootint_system_new(type_name: *const c_char, out: *mut *mut RootintSystem) -> RootintStatus {
    guard(|| {
        if out.is_null() {
            return fail(RootintStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let t = match read_str(type_name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match build_root_system(t) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(RootintSystem { inner: rs }));
                RootintStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from [`rootint_system_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rootint_system_free(h: *mut RootintSystem) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Rank of the system.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rootint_system_rank(h: *const RootintSystem) -> usize {
    h.as_ref().map_or(0, |h| h.inner.rank())
}

/// Number of roots, positive and negative.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rootint_system_root_count(h: *const RootintSystem) -> usize {
    h.as_ref().map_or(0, |h| h.inner.roots().len())
}

/// Canonical type string of the system, e.g. `"A1xB2"`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rootint_system_type(h: *const RootintSystem, out: *mut *mut c_char) -> RootintStatus {
    guard(|| {
        let (Some(h), false) = (h.as_ref(), out.is_null()) else {
            return fail(RootintStatus::NullPointer, "null handle or output pointer");
        };
        *out = into_c(h.inner.spec().to_string());
        RootintStatus::Ok
    })
}

/// The integer `N_Σ`, as a decimal string.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rootint_system_n_sigma(h: *const RootintSystem, out: *mut *mut c_char) -> RootintStatus {
    guard(|| {
        let (Some(h), false) = (h.as_ref(), out.is_null()) else {
            return fail(RootintStatus::NullPointer, "null handle or output pointer");
        };
        *out = ptr::null_mut();
        match n_sigma(&h.inner) {
            Ok(n) => {
                *out = into_c(n.to_string());
                RootintStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Rank-one bound for the Levi type `type_name`; the empty string means no
/// components. Decimal string output.
///
/// # Safety
/// `type_name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rootint_rank_one_bound(type_name: *const c_char, out: *mut *mut c_char) -> RootintStatus {
    guard(|| {
        if out.is_null() {
            return fail(RootintStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let t = match read_str(type_name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match RootSystemSpec::parse_optional(t).and_then(|s| rank_one_bound(s.as_ref())) {
            Ok(b) => {
                *out = into_c(b.to_string());
                RootintStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Elementary divisors of a row-major `rows × cols` integer matrix, written
/// as a JSON array of decimal strings.
///
/// # Safety
/// `entries` must point to `rows * cols` values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn rootint_snf_divisors(
    entries: *const i64,
    rows: usize,
    cols: usize,
    out: *mut *mut c_char,
) -> RootintStatus {
    guard(|| {
        if out.is_null() || (entries.is_null() && rows * cols > 0) {
            return fail(RootintStatus::NullPointer, "null matrix or output pointer");
        }
        *out = ptr::null_mut();
        let Some(len) = rows.checked_mul(cols) else {
            return fail(RootintStatus::InputError, "matrix size overflows");
        };
        let flat: &[i64] = if len == 0 { &[] } else { std::slice::from_raw_parts(entries, len) };
        let m: Vec<Vec<i64>> = (0..rows).map(|i| flat[i * cols..(i + 1) * cols].to_vec()).collect();
        match IntegerMatrix::from_i64(&m) {
            Ok(m) => {
                let ds: Vec<String> = smith_normal_form(&m).divisors.iter().map(|d| format!("\"{d}\"")).collect();
                *out = into_c(format!("[{}]", ds.join(",")));
                RootintStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Runs the command-line interface in process. `argv[0]` is the program
/// name. Captured stdout and stderr are returned as strings and the process
/// exit code in `exit_code`.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn rootint_cli_run(
    argv: *const *const c_char,
    argc: usize,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
    exit_code: *mut c_int,
) -> RootintStatus {
    guard(|| {
        if out_stdout.is_null() || out_stderr.is_null() || exit_code.is_null() || (argv.is_null() && argc > 0) {
            return fail(RootintStatus::NullPointer, "null argument");
        }
        let mut args = Vec::with_capacity(argc);
        for i in 0..argc {
            match read_str(*argv.add(i)) {
                Ok(a) => args.push(a.to_string()),
                Err(s) => return s,
            }
        }
        let (code, stdout, stderr) = rootint::cli::run(args);
        *out_stdout = into_c(stdout);
        *out_stderr = into_c(stderr);
        *exit_code = code;
        RootintStatus::Ok
    })
}
