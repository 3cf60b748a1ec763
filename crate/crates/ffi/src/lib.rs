//! C interface to `binders-core`.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `*_free` function. Every fallible call returns a
//! [`BindersStatus`]; on anything but `BINDERS_STATUS_OK` the message is
//! available from [`binders_last_error`] on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with [`binders_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use binders::fincat::{check_category_laws, FinCategory};
use binders::monoidal::{check_monoidal_laws, MonoidalCategory};
use binders::signature::{parse_signature, render_signature, BindingSignature};
use binders::syntax::{check_monad_laws, count_terms, parse_term, substitute, Substitution};
use binders::LawReport;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindersStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// A parsed binding signature.
pub struct BindersSignature(BindingSignature);

/// The outcome of a law check.
pub struct BindersReport(LawReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(BindersStatus, String);

impl Failure {
    fn parse(e: impl std::fmt::Display) -> Self {
        Failure(BindersStatus::Parse, e.to_string())
    }

    fn invalid(e: impl std::fmt::Display) -> Self {
        Failure(BindersStatus::Invalid, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BindersStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BindersStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BindersStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(BindersStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BindersStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(BindersStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BindersStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn binders_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn binders_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a signature in the `sig name { c : [k, ...]; }` format.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_signature_parse(source: *const c_char, out: *mut *mut BindersSignature) -> BindersStatus {
    guard(|| {
        let sig = parse_signature(text(source, "source")?).map_err(Failure::parse)?;
        write(out, Box::into_raw(Box::new(BindersSignature(sig))))
    })
}

/// The untyped lambda calculus: `app : [0, 0]` and `abs : [1]`.
#[no_mangle]
pub extern "C" fn binders_signature_lambda() -> *mut BindersSignature {
    Box::into_raw(Box::new(BindersSignature(BindingSignature::lambda())))
}

/// # Safety
/// `sig` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn binders_signature_free(sig: *mut BindersSignature) {
    if !sig.is_null() {
        drop(Box::from_raw(sig));
    }
}

/// Renders a signature in canonical form.
///
/// # Safety
/// `sig` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_signature_render(sig: *const BindersSignature, out: *mut *mut c_char) -> BindersStatus {
    guard(|| {
        let sig = handle(sig, "signature")?;
        write(out, owned_string(render_signature(&sig.0)))
    })
}

/// Number of terms of depth below `depth` in scope `scope`, saturating at
/// `UINT64_MAX`.
///
/// # Safety
/// `sig` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_count_terms(
    sig: *const BindersSignature,
    scope: usize,
    depth: usize,
    out: *mut u64,
) -> BindersStatus {
    guard(|| {
        let sig = handle(sig, "signature")?;
        write(out, u64::try_from(count_terms(&sig.0, scope, depth)).unwrap_or(u64::MAX))
    })
}

/// Substitutes `images[i]` (terms in scope `target`) for variable `i` of
/// `term` (a term in scope `scope`). `image_count` must equal `scope`.
///
/// # Safety
/// `sig` must be a live handle, `term` and the `image_count` entries of
/// `images` NUL-terminated strings, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_substitute(
    sig: *const BindersSignature,
    term: *const c_char,
    scope: usize,
    images: *const *const c_char,
    image_count: usize,
    target: usize,
    out: *mut *mut c_char,
) -> BindersStatus {
    guard(|| {
        let sig = &handle(sig, "signature")?.0;
        let t = parse_term(sig, text(term, "term")?, scope).map_err(Failure::parse)?;
        if image_count > 0 && images.is_null() {
            return Err(Failure(BindersStatus::NullPointer, "images is null".into()));
        }
        let mut bodies = Vec::with_capacity(image_count);
        for i in 0..image_count {
            let s = text(*images.add(i), "image")?;
            bodies.push(parse_term(sig, s, target).map_err(Failure::parse)?.body);
        }
        let sigma = Substitution::new(scope, target, bodies).map_err(Failure::invalid)?;
        let result = substitute(sig, &t, &sigma).map_err(Failure::invalid)?;
        write(out, owned_string(result.to_string()))
    })
}

/// Checks the laws of a finite category given as a JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_check_category(json: *const c_char, out: *mut *mut BindersReport) -> BindersStatus {
    guard(|| {
        let c = FinCategory::from_json(text(json, "json")?).map_err(Failure::parse)?;
        write(out, Box::into_raw(Box::new(BindersReport(check_category_laws(&c)))))
    })
}

/// Checks a monoidal category given as a JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_check_monoidal(json: *const c_char, out: *mut *mut BindersReport) -> BindersStatus {
    guard(|| {
        let m = MonoidalCategory::from_json(text(json, "json")?).map_err(Failure::parse)?;
        let r = check_monoidal_laws(&m).map_err(Failure::invalid)?;
        write(out, Box::into_raw(Box::new(BindersReport(r))))
    })
}

/// Exhaustively checks the substitution monad laws for terms of depth below
/// `depth` in scopes up to `max_scope`.
///
/// # Safety
/// `sig` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_check_monad_laws(
    sig: *const BindersSignature,
    depth: usize,
    max_scope: usize,
    out: *mut *mut BindersReport,
) -> BindersStatus {
    guard(|| {
        let sig = handle(sig, "signature")?;
        let r = check_monad_laws(&sig.0, depth, max_scope);
        write(out, Box::into_raw(Box::new(BindersReport(r))))
    })
}

/// # Safety
/// `report` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn binders_report_free(report: *mut BindersReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// 1 if no law was violated, 0 otherwise (including a null handle).
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn binders_report_passed(report: *const BindersReport) -> i32 {
    report.as_ref().map_or(0, |r| r.0.passed() as i32)
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn binders_report_checks_run(report: *const BindersReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.checks_run)
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn binders_report_violation_count(report: *const BindersReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.violations.len())
}

/// The law name and witness of violation `index`.
///
/// # Safety
/// `report` must be a live handle; `law` and `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binders_report_violation(
    report: *const BindersReport,
    index: usize,
    law: *mut *mut c_char,
    witness: *mut *mut c_char,
) -> BindersStatus {
    guard(|| {
        let r = handle(report, "report")?;
        let v = r.0.violations.get(index).ok_or_else(|| {
            Failure(
                BindersStatus::OutOfRange,
                format!("violation {index} of {}", r.0.violations.len()),
            )
        })?;
        if law.is_null() || witness.is_null() {
            return Err(Failure(BindersStatus::NullPointer, "output pointer is null".into()));
        }
        write(law, owned_string(v.law.clone()))?;
        write(witness, owned_string(v.witness.clone()))
    })
}

/// The report as a JSON object with `checks_run` and `violations`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn binders_report_json(report: *const BindersReport, out: *mut *mut c_char) -> BindersStatus {
    guard(|| {
        let r = handle(report, "report")?;
        let json = serde_json::json!({
            "checks_run": r.0.checks_run,
            "violations": r.0.violations,
        });
        write(out, owned_string(json.to_string()))
    })
}
