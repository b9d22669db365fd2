//! C ABI for curvesim.
//!
//! Curves and results are opaque handles owned by the caller and released
//! with their `_free` function. Every call returns a `CsStatus`; on
//! failure `cs_last_error_message` describes the error for the current
//! thread. Strings returned by the library must be released with
//! `cs_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use curvesim::orientation::OrientationFilter;
use curvesim::solver::{decide_similar, Decision, Options};
use curvesim::{Error, MultiPoly, Rational};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    /// The input violates a precondition (line, circle, constant, ...).
    Precondition = 4,
    /// The analysis could not finish (for example infinitely many solutions).
    AnalysisFailed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsOrientation {
    Both = 0,
    Preserving = 1,
    Reversing = 2,
}

/// A parsed curve `f(x, y) = 0`.
pub struct CsCurve {
    poly: MultiPoly<Rational>,
}

/// The outcome of a similarity check.
pub struct CsResult {
    decision: Decision,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: CsStatus, msg: &str) -> CsStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> CsStatus {
    match e {
        Error::Parse { .. } => CsStatus::ParseError,
        e if e.is_precondition() => CsStatus::Precondition,
        _ => CsStatus::AnalysisFailed,
    }
}

fn guarded(f: impl FnOnce() -> CsStatus) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(CsStatus::Panic, "internal panic"),
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Parses a curve equation such as `"x^3 + y^3 - 3*x*y"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_curve_parse(text: *const c_char, out: *mut *mut CsCurve) -> CsStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return fail(CsStatus::NullPointer, "null pointer argument");
        }
        *out = ptr::null_mut();
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(CsStatus::InvalidUtf8, "input is not valid UTF-8");
        };
        match curvesim::parse::parse_curve(s) {
            Ok(poly) => {
                *out = Box::into_raw(Box::new(CsCurve { poly }));
                CsStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Releases a curve. Null is ignored.
///
/// # Safety
/// `curve` must come from `cs_curve_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_curve_free(curve: *mut CsCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Canonical text of a curve, or null on a null handle.
///
/// # Safety
/// `curve` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_curve_to_string(curve: *const CsCurve) -> *mut c_char {
    match curve.as_ref() {
        Some(c) => to_c_string(c.poly.to_string()),
        None => ptr::null_mut(),
    }
}

/// Finds every similarity mapping `f = 0` onto `g = 0`.
///
/// # Safety
/// `f` and `g` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_check(f: *const CsCurve, g: *const CsCurve, orientation: CsOrientation, out: *mut *mut CsResult) -> CsStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CsStatus::NullPointer, "null pointer argument");
        }
        *out = ptr::null_mut();
        let (Some(f), Some(g)) = (f.as_ref(), g.as_ref()) else {
            return fail(CsStatus::NullPointer, "null curve handle");
        };
        let filter = match orientation {
            CsOrientation::Both => OrientationFilter::Both,
            CsOrientation::Preserving => OrientationFilter::Preserving,
            CsOrientation::Reversing => OrientationFilter::Reversing,
        };
        match decide_similar(&f.poly, &g.poly, &Options { orientation: filter }) {
            Ok(decision) => {
                *out = Box::into_raw(Box::new(CsResult { decision }));
                CsStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// 1 if at least one similarity was found, 0 if none, -1 on a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_result_is_similar(result: *const CsResult) -> i32 {
    match result.as_ref() {
        Some(r) => r.decision.similar as i32,
        None => -1,
    }
}

/// Number of similarities found; 0 on a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_result_count(result: *const CsResult) -> usize {
    result.as_ref().map_or(0, |r| r.decision.similarities.len())
}

/// The result as the JSON document printed by `curvesim check --json`.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_result_json(result: *const CsResult) -> *mut c_char {
    match result.as_ref() {
        Some(r) => to_c_string(curvesim::cli::decision_json(&r.decision)),
        None => ptr::null_mut(),
    }
}

/// Releases a result. Null is ignored.
///
/// # Safety
/// `result` must come from `cs_check` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_result_free(result: *mut CsResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
