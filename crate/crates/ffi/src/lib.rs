//! C ABI over the verification engine.
//!
//! Objects cross the boundary as opaque handles owned by the caller and released with the
//! matching `*_free`. Every fallible call returns a [`BhlStatus`]; on failure the message is
//! available from [`bhl_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use bhl::error::Error;
use bhl::functors::{check_functor, CatObj, FunctorId, Property};
use bhl::hopf::{check_hopf, Hopf};
use bhl::io::{algebra_to_text, builtin_algebra, builtin_module, parse_algebra};
use bhl::report::{Report, Status};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BhlStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// A hypothesis of the requested construction or check does not hold.
    Precondition = 4,
    /// Unknown name, signature mismatch or another misuse.
    Invalid = 5,
    Panic = 6,
}

/// Outcome of a report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BhlOutcome {
    Pass = 0,
    Fail = 2,
    Precondition = 3,
}

/// Opaque Hopf algebra.
pub struct BhlAlgebra(Hopf);

/// Opaque object of a module category.
pub struct BhlModule(CatObj);

/// Opaque verification report.
pub struct BhlReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: BhlStatus, msg: impl AsRef<str>) -> BhlStatus {
    set_error(msg.as_ref());
    status
}

fn from_error(e: &Error) -> BhlStatus {
    let status = match e {
        Error::Map(bhl::multilinear::MapError::Parse { .. }) => BhlStatus::Parse,
        e if e.is_precondition() => BhlStatus::Precondition,
        _ => BhlStatus::Invalid,
    };
    fail(status, e.to_string())
}

/// Runs `f` with panics turned into [`BhlStatus::Panic`].
fn guard(f: impl FnOnce() -> BhlStatus) -> BhlStatus {
    set_error("");
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(BhlStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, BhlStatus> {
    if p.is_null() {
        return Err(fail(BhlStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(BhlStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> BhlStatus {
    *out = Box::into_raw(Box::new(v));
    BhlStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread; empty after a success. Borrowed.
#[no_mangle]
pub extern "C" fn bhl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bhl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A built-in algebra: `kZ<N>`, `sweedler`, `hmnd:<m>:<d1,d2,..>`.
///
/// # Safety
/// `name` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_algebra_builtin(name: *const c_char, out: *mut *mut BhlAlgebra) -> BhlStatus {
    guard(|| {
        if out.is_null() {
            return fail(BhlStatus::NullArgument, "null output pointer");
        }
        let name = try_status!(read_str(name));
        match builtin_algebra(name) {
            Ok(h) => put(out, BhlAlgebra(h)),
            Err(e) => from_error(&e),
        }
    })
}

/// Parses an algebra from the text format.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_algebra_parse(text: *const c_char, out: *mut *mut BhlAlgebra) -> BhlStatus {
    guard(|| {
        if out.is_null() {
            return fail(BhlStatus::NullArgument, "null output pointer");
        }
        let text = try_status!(read_str(text));
        match parse_algebra(text, "ffi") {
            Ok(h) => put(out, BhlAlgebra(h)),
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `a` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bhl_algebra_free(a: *mut BhlAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension of the algebra, 0 for a null handle.
///
/// # Safety
/// `a` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_algebra_dim(a: *const BhlAlgebra) -> usize {
    a.as_ref().map_or(0, |a| a.0.dim)
}

/// The algebra in the text format; release with [`bhl_string_free`]. Null for a null handle.
///
/// # Safety
/// `a` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_algebra_to_text(a: *const BhlAlgebra) -> *mut c_char {
    match a.as_ref() {
        Some(a) => owned_string(algebra_to_text(&a.0)),
        None => ptr::null_mut(),
    }
}

/// The Drinfel'd double of `a`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_double(a: *const BhlAlgebra, out: *mut *mut BhlAlgebra) -> BhlStatus {
    guard(|| {
        let (Some(a), false) = (a.as_ref(), out.is_null()) else {
            return fail(BhlStatus::NullArgument, "null argument");
        };
        match bhl::double::drinfeld_double(&a.0) {
            Ok(d) => put(out, BhlAlgebra(d.hopf)),
            Err(e) => from_error(&e),
        }
    })
}

/// Hopf axioms of `a`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_verify_hopf(a: *const BhlAlgebra, out: *mut *mut BhlReport) -> BhlStatus {
    guard(|| {
        let (Some(a), false) = (a.as_ref(), out.is_null()) else {
            return fail(BhlStatus::NullArgument, "null argument");
        };
        put(out, BhlReport(check_hopf(&a.0)))
    })
}

/// A built-in module over `a` (`adjoint`, `adjoint_ll`, `regular_left`, `LR_Hcop:1`, ...).
///
/// # Safety
/// `a` is a live handle; `name` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_module_builtin(
    a: *const BhlAlgebra,
    name: *const c_char,
    out: *mut *mut BhlModule,
) -> BhlStatus {
    guard(|| {
        let (Some(a), false) = (a.as_ref(), out.is_null()) else {
            return fail(BhlStatus::NullArgument, "null argument");
        };
        let name = try_status!(read_str(name));
        match builtin_module(name, &a.0) {
            Ok(m) => put(out, BhlModule(m)),
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_module_free(m: *mut BhlModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Structure laws of a module (YD conditions or D-module axioms).
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_module_check(m: *const BhlModule, out: *mut *mut BhlReport) -> BhlStatus {
    guard(|| {
        let (Some(m), false) = (m.as_ref(), out.is_null()) else {
            return fail(BhlStatus::NullArgument, "null argument");
        };
        put(out, BhlReport(m.0.check()))
    })
}

/// A functor property (`roundtrip`, `monoidal`, `braided`) on `m` and, when not null, `n`.
/// Monoidality and braidings use `m` twice when `n` is null.
///
/// # Safety
/// `functor` and `property` are nul-terminated strings; `m` is a live handle; `n` is null or
/// a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_check_functor(
    functor: *const c_char,
    property: *const c_char,
    m: *const BhlModule,
    n: *const BhlModule,
    out: *mut *mut BhlReport,
) -> BhlStatus {
    guard(|| {
        let (Some(m), false) = (m.as_ref(), out.is_null()) else {
            return fail(BhlStatus::NullArgument, "null argument");
        };
        let f = try_status!(read_str(functor));
        let p = try_status!(read_str(property));
        let Some(fid) = FunctorId::parse(f) else {
            return fail(BhlStatus::Invalid, format!("unknown functor `{f}`"));
        };
        let Some(prop) = Property::parse(p) else {
            return fail(BhlStatus::Invalid, format!("unknown property `{p}`"));
        };
        let n = n.as_ref().map(|n| &n.0).or(match prop {
            Property::Roundtrip => None,
            _ => Some(&m.0),
        });
        match check_functor(fid, &m.0, n, prop) {
            Ok(r) => put(out, BhlReport(r)),
            Err(e) => from_error(&e),
        }
    })
}

/// One acceptance criterion, `1..=12`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bhl_suite_criterion(k: u32, out: *mut *mut BhlReport) -> BhlStatus {
    guard(|| {
        if out.is_null() {
            return fail(BhlStatus::NullArgument, "null output pointer");
        }
        match bhl::suite::criterion(k as usize) {
            Ok(r) => put(out, BhlReport(r)),
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_report_free(r: *mut BhlReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Failure dominates precondition, which dominates pass. A null handle reads as failure.
///
/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_report_outcome(r: *const BhlReport) -> BhlOutcome {
    match r.as_ref() {
        None => BhlOutcome::Fail,
        Some(r) if r.0.any_fail() => BhlOutcome::Fail,
        Some(r) if r.0.checks.iter().any(|c| c.status == Status::Precondition) => BhlOutcome::Precondition,
        Some(_) => BhlOutcome::Pass,
    }
}

/// Number of checks in the report.
///
/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_report_len(r: *const BhlReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.checks.len())
}

/// The report as a JSON array of `{check, status, witness}`; release with [`bhl_string_free`].
///
/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bhl_report_json(r: *const BhlReport) -> *mut c_char {
    match r.as_ref() {
        Some(r) => owned_string(r.0.to_json()),
        None => ptr::null_mut(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn sweedler_roundtrip_through_text() {
        unsafe {
            let mut a = ptr::null_mut();
            assert_eq!(bhl_algebra_builtin(cstr("sweedler").as_ptr(), &mut a), BhlStatus::Ok);
            assert_eq!(bhl_algebra_dim(a), 4);
            let text = bhl_algebra_to_text(a);
            let mut b = ptr::null_mut();
            assert_eq!(bhl_algebra_parse(text, &mut b), BhlStatus::Ok);
            assert!((*a).0.structure_eq(&(*b).0));
            let mut r = ptr::null_mut();
            assert_eq!(bhl_verify_hopf(b, &mut r), BhlStatus::Ok);
            assert_eq!(bhl_report_outcome(r), BhlOutcome::Pass);
            assert!(bhl_report_len(r) > 0);
            bhl_report_free(r);
            bhl_string_free(text);
            bhl_algebra_free(a);
            bhl_algebra_free(b);
        }
    }

    #[test]
    fn double_of_kz2_has_dim_4() {
        unsafe {
            let mut a = ptr::null_mut();
            assert_eq!(bhl_algebra_builtin(cstr("kZ2").as_ptr(), &mut a), BhlStatus::Ok);
            let mut d = ptr::null_mut();
            assert_eq!(bhl_double(a, &mut d), BhlStatus::Ok);
            assert_eq!(bhl_algebra_dim(d), 4);
            bhl_algebra_free(a);
            bhl_algebra_free(d);
        }
    }

    #[test]
    fn parse_error_carries_offset() {
        unsafe {
            let mut a = ptr::null_mut();
            let st = bhl_algebra_parse(cstr("conductor=1\ndim=2\n??").as_ptr(), &mut a);
            assert_eq!(st, BhlStatus::Parse);
            let msg = CStr::from_ptr(bhl_last_error()).to_str().unwrap();
            assert!(msg.contains("18"), "{msg}");
            assert!(a.is_null());
        }
    }

    #[test]
    fn null_and_unknown_arguments() {
        unsafe {
            let mut a = ptr::null_mut();
            assert_eq!(bhl_algebra_builtin(ptr::null(), &mut a), BhlStatus::NullArgument);
            assert_eq!(bhl_algebra_builtin(cstr("kZ0x").as_ptr(), &mut a), BhlStatus::Precondition);
            assert_eq!(bhl_report_outcome(ptr::null()), BhlOutcome::Fail);
            assert!(bhl_report_json(ptr::null()).is_null());
        }
    }

    #[test]
    fn l_braided_counterexample_and_e_braided_pass() {
        unsafe {
            let mut h = ptr::null_mut();
            assert_eq!(bhl_algebra_builtin(cstr("sweedler").as_ptr(), &mut h), BhlStatus::Ok);
            let mut m = ptr::null_mut();
            assert_eq!(bhl_module_builtin(h, cstr("adjoint_ll").as_ptr(), &mut m), BhlStatus::Ok);
            let mut r = ptr::null_mut();
            let st = bhl_check_functor(cstr("L").as_ptr(), cstr("braided").as_ptr(), m, ptr::null(), &mut r);
            assert_eq!(st, BhlStatus::Ok);
            assert_eq!(bhl_report_outcome(r), BhlOutcome::Fail);
            let json = bhl_report_json(r);
            assert!(CStr::from_ptr(json).to_str().unwrap().contains("\"L.braided\""));
            bhl_string_free(json);
            bhl_report_free(r);
            bhl_module_free(m);
            bhl_algebra_free(h);

            let mut k3 = ptr::null_mut();
            assert_eq!(bhl_algebra_builtin(cstr("kZ3").as_ptr(), &mut k3), BhlStatus::Ok);
            let mut x = ptr::null_mut();
            assert_eq!(bhl_module_builtin(k3, cstr("LR_Hcop").as_ptr(), &mut x), BhlStatus::Ok);
            let mut r = ptr::null_mut();
            let st = bhl_check_functor(cstr("E").as_ptr(), cstr("braided").as_ptr(), x, ptr::null(), &mut r);
            assert_eq!(st, BhlStatus::Ok);
            assert_eq!(bhl_report_outcome(r), BhlOutcome::Pass);
            bhl_report_free(r);
            bhl_module_free(x);
            bhl_algebra_free(k3);
        }
    }

    #[test]
    fn signature_mismatch_is_invalid() {
        unsafe {
            let mut h = ptr::null_mut();
            bhl_algebra_builtin(cstr("kZ2").as_ptr(), &mut h);
            let mut m = ptr::null_mut();
            bhl_module_builtin(h, cstr("adjoint").as_ptr(), &mut m);
            let mut r = ptr::null_mut();
            let st = bhl_check_functor(cstr("F").as_ptr(), cstr("roundtrip").as_ptr(), m, ptr::null(), &mut r);
            assert_eq!(st, BhlStatus::Invalid);
            assert!(r.is_null());
            bhl_module_free(m);
            bhl_algebra_free(h);
        }
    }
}
