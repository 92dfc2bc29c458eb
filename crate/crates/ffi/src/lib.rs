//! C ABI for invweyl.
//!
//! Results are returned through opaque [`InvweylBasis`] handles that expose
//! their size and a JSON rendering. Every function returns an
//! [`InvweylStatus`]; on failure a message is available from
//! [`invweyl_last_error_message`] on the same thread. Panics never cross the
//! boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use invweyl::annihilator::{bann, GroupSpec};
use invweyl::canonical::{canonical_basis, LowestWeightVector};
use invweyl::combinat::SetPartition;
use invweyl::specht::{specht_json, specht_poly};
use serde_json::{json, Value};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvweylStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ComputationFailed = 4,
    Panic = 5,
}

/// An owned result: a list of polynomials with its JSON form.
pub struct InvweylBasis {
    len: usize,
    json: Value,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("NUL bytes removed")));
}

struct Failure(InvweylStatus, String);

impl From<invweyl::Error> for Failure {
    fn from(e: invweyl::Error) -> Self {
        use invweyl::Error as E;
        let status = match e {
            E::InvalidArgument(_)
            | E::InvalidGroupSpec(_)
            | E::Parse(_)
            | E::IndexOutOfRange { .. }
            | E::LengthMismatch { .. }
            | E::NvarsMismatch { .. } => InvweylStatus::InvalidArgument,
            _ => InvweylStatus::ComputationFailed,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> InvweylStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            InvweylStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            InvweylStatus::Panic
        }
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(InvweylStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(InvweylStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn emit(out: *mut *mut InvweylBasis, f: impl FnOnce() -> Result<InvweylBasis, Failure>) -> InvweylStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(InvweylStatus::NullPointer, "output pointer is null".into()));
        }
        *out = ptr::null_mut();
        let b = f()?;
        *out = Box::into_raw(Box::new(b));
        Ok(())
    })
}

/// Computes B^ann for a group spec such as "S3", "G(2,1,2)", "C4" or "D5".
///
/// # Safety
/// `group` must be a valid NUL-terminated string and `out` valid for a
/// pointer write. On success `*out` owns a handle to release with
/// [`invweyl_basis_free`]; on failure it is set to null.
#[no_mangle]
pub unsafe extern "C" fn invweyl_bann_new(group: *const c_char, out: *mut *mut InvweylBasis) -> InvweylStatus {
    emit(out, || {
        let g: GroupSpec = read_str(group, "group")?.parse()?;
        let b = bann(&g)?;
        let json = json!({ "group": g.to_string(), "dim": b.dim(), "basis": b.to_json() });
        Ok(InvweylBasis { len: b.dim(), json })
    })
}

/// Computes the canonical basis of B^ann(Sₙ), 1 ≤ n ≤ 8.
///
/// # Safety
/// `out` must be valid for a pointer write; ownership as for
/// [`invweyl_bann_new`].
#[no_mangle]
pub unsafe extern "C" fn invweyl_canonical_basis_new(n: usize, out: *mut *mut InvweylBasis) -> InvweylStatus {
    emit(out, || {
        if n == 0 || n > 8 {
            return Err(Failure(InvweylStatus::InvalidArgument, format!("n = {n} outside 1..=8")));
        }
        let vs = canonical_basis(n)?;
        let json = json!({ "n": n, "vectors": vs.iter().map(LowestWeightVector::to_json).collect::<Vec<_>>() });
        Ok(InvweylBasis { len: vs.len(), json })
    })
}

/// Computes the Specht polynomial Π (x_k^d − x_l^d) of a set partition
/// written as "{1,2},{3}".
///
/// # Safety
/// `blocks` must be a valid NUL-terminated string and `out` valid for a
/// pointer write; ownership as for [`invweyl_bann_new`].
#[no_mangle]
pub unsafe extern "C" fn invweyl_specht_new(
    blocks: *const c_char,
    d: u32,
    out: *mut *mut InvweylBasis,
) -> InvweylStatus {
    emit(out, || {
        let p = SetPartition::parse(read_str(blocks, "blocks")?)?;
        let poly = specht_poly(&p, d)?;
        Ok(InvweylBasis { len: 1, json: specht_json(&p, None, d, &poly) })
    })
}

/// Writes the number of polynomials held by `basis` to `*len`.
///
/// # Safety
/// `basis` must be null or a live handle; `len` must be null or valid for
/// a write.
#[no_mangle]
pub unsafe extern "C" fn invweyl_basis_len(basis: *const InvweylBasis, len: *mut usize) -> InvweylStatus {
    guard(|| {
        if basis.is_null() || len.is_null() {
            return Err(Failure(InvweylStatus::NullPointer, "null argument".into()));
        }
        *len = (*basis).len;
        Ok(())
    })
}

/// Renders `basis` as compact JSON into a new string owned by the caller,
/// to release with [`invweyl_string_free`].
///
/// # Safety
/// `basis` must be null or a live handle; `out` must be null or valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn invweyl_basis_to_json(basis: *const InvweylBasis, out: *mut *mut c_char) -> InvweylStatus {
    guard(|| {
        if basis.is_null() || out.is_null() {
            return Err(Failure(InvweylStatus::NullPointer, "null argument".into()));
        }
        let s = serde_json::to_string(&(*basis).json).expect("JSON values serialize");
        *out = CString::new(s).expect("JSON has no NUL bytes").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from [`invweyl_basis_to_json`]
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn invweyl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `basis` must be null or a handle from this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn invweyl_basis_free(basis: *mut InvweylBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// The message of the last failed call on this thread, or null. The
/// pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn invweyl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn invweyl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
