//! C ABI for the irreducibility analysis.
//!
//! The surface is deliberately small: parse-and-analyze an expression into
//! an opaque report handle, query the handle, free everything through the
//! matching `_free` functions. Status codes mirror the CLI exit codes:
//! 0 success, 1 parse/contract error, 2 internal diagnostic, 3 null
//! argument, 4 invalid UTF-8.
//!
//! The generated header lands in `include/quasiord.h`.

use quasiord::charseq::VectorStrictness;
use quasiord::cli::report::report_json;
use quasiord::cli::parse_poly;
use quasiord::criterion::{analyze, Config, FailureKind, Report};
use quasiord::Error;
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};

/// Opaque analysis report handle.
pub struct QoReport {
    report: Report,
    input: String,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|c| *c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).ok();
    });
}

fn status_of(err: &Error) -> c_int {
    match err {
        Error::Internal(_) => 2,
        _ => 1,
    }
}

/// Analyze the polynomial expression in `expr` (UTF-8, NUL-terminated).
///
/// `num_vars` fixes the number of x-variables; pass 0 to infer it from the
/// expression. `strict_mode` selects the strict-inequality semantics:
/// 0 weak (default), 1 strong. On status 0 or 2, `*out` receives a report
/// handle to be freed with [`qo_report_free`]; status 2 flags an internal
/// diagnostic verdict (ambiguous initial monomial). On other statuses
/// `*out` is null and [`qo_last_error`] describes the problem.
///
/// # Safety
/// `expr` must point to a NUL-terminated string and `out` to a writable
/// pointer slot; both must stay valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn qo_analyze(
    expr: *const c_char,
    num_vars: c_int,
    strict_mode: c_int,
    out: *mut *mut QoReport,
) -> c_int {
    if expr.is_null() || out.is_null() {
        set_last_error("null argument");
        return 3;
    }
    *out = std::ptr::null_mut();
    let Ok(text) = CStr::from_ptr(expr).to_str() else {
        set_last_error("expression is not valid UTF-8");
        return 4;
    };
    let vars = if num_vars > 0 { Some(num_vars as usize) } else { None };
    let strictness = if strict_mode == 1 {
        VectorStrictness::StrongStrict
    } else {
        VectorStrictness::WeakStrict
    };
    let (poly, _) = match parse_poly(text, vars) {
        Ok(p) => p,
        Err(e) => {
            set_last_error(&e.to_string());
            return status_of(&e);
        }
    };
    let input = poly.to_string();
    match analyze(&poly, Config { strictness }) {
        Ok(report) => {
            let ambiguous = matches!(
                report.failure.as_ref().map(|f| &f.kind),
                Some(FailureKind::AmbiguousInitialMonomial { .. })
            );
            *out = Box::into_raw(Box::new(QoReport { report, input }));
            if ambiguous {
                set_last_error("ambiguous initial monomial");
                2
            } else {
                0
            }
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Verdict of a report: 1 irreducible quasi-ordinary, 0 not, -1 null handle.
///
/// # Safety
/// `report` must be null or a handle returned by [`qo_analyze`].
#[no_mangle]
pub unsafe extern "C" fn qo_report_verdict(report: *const QoReport) -> c_int {
    let Some(r) = report.as_ref() else {
        return -1;
    };
    if r.report.is_irreducible() {
        1
    } else {
        0
    }
}

/// Full report as a JSON document; free with [`qo_string_free`]. Returns
/// null on a null handle.
///
/// # Safety
/// `report` must be null or a handle returned by [`qo_analyze`].
#[no_mangle]
pub unsafe extern "C" fn qo_report_json(report: *const QoReport) -> *mut c_char {
    let Some(r) = report.as_ref() else {
        return std::ptr::null_mut();
    };
    let doc = report_json(&r.report, &r.input);
    let rendered = serde_json::to_string_pretty(&doc).unwrap_or_default();
    CString::new(rendered).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Last error message for this thread, or null when none was recorded; free
/// with [`qo_string_free`].
#[no_mangle]
pub extern "C" fn qo_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// Free a report handle. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle returned by [`qo_analyze`], not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn qo_report_free(report: *mut QoReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Free a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by [`qo_report_json`] or
/// [`qo_last_error`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyze_str(expr: &str, vars: c_int) -> (c_int, *mut QoReport) {
        let c = CString::new(expr).unwrap();
        let mut handle: *mut QoReport = std::ptr::null_mut();
        let status = unsafe { qo_analyze(c.as_ptr(), vars, 0, &mut handle) };
        (status, handle)
    }

    #[test]
    fn analyze_roundtrip_through_the_c_surface() {
        let (status, handle) =
            analyze_str("y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2", 2);
        assert_eq!(status, 0);
        assert_eq!(unsafe { qo_report_verdict(handle) }, 1);
        let json = unsafe { qo_report_json(handle) };
        assert!(!json.is_null());
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
        unsafe { qo_string_free(json) };
        unsafe { qo_report_free(handle) };
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["verdict"], "irreducible_quasi_ordinary");
        assert_eq!(doc["d_sequence"], serde_json::json!(["8", "2", "1"]));
    }

    #[test]
    fn reducible_input_reports_cleanly() {
        let (status, handle) =
            analyze_str("y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^4*x2^2 - x1^5*x2^3", 2);
        assert_eq!(status, 0);
        assert_eq!(unsafe { qo_report_verdict(handle) }, 0);
        unsafe { qo_report_free(handle) };
    }

    #[test]
    fn parse_errors_set_status_and_message() {
        let (status, handle) = analyze_str("2*y^2 - x1", 1);
        assert_eq!(status, 1);
        assert!(handle.is_null());
        let msg = qo_last_error();
        assert!(!msg.is_null());
        let text = unsafe { CStr::from_ptr(msg) }.to_str().unwrap().to_owned();
        unsafe { qo_string_free(msg) };
        assert!(text.contains("monic"));
    }

    #[test]
    fn null_arguments_are_rejected() {
        let mut handle: *mut QoReport = std::ptr::null_mut();
        let status = unsafe { qo_analyze(std::ptr::null(), 0, 0, &mut handle) };
        assert_eq!(status, 3);
        assert_eq!(unsafe { qo_report_verdict(std::ptr::null()) }, -1);
        unsafe { qo_report_free(std::ptr::null_mut()) };
        unsafe { qo_string_free(std::ptr::null_mut()) };
    }
}
