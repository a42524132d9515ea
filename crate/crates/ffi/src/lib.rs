//! C ABI for the pangular library.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`PangStatus`] and writes its result
//!   through out-pointers; `PANG_STATUS_OK` (0) means success.
//! * Vectors are passed as `(const double*, size_t)` pairs.
//! * The verification suite returns an opaque `PangReports` handle that
//!   must be released with [`pang_reports_free`]. Strings borrowed from a
//!   handle stay valid until the handle is freed.
//! * No function panics across the FFI boundary; invalid input is reported
//!   through the status code.

#![allow(clippy::missing_safety_doc)] // safety contract documented in the module docs

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pangular::bounds;
use pangular::error::Error;
use pangular::metrics::{self, PExponent};
use pangular::special::{self, Distortion};
use pangular::verify::{self, CheckReport};
use pangular::{RadialExponents, Vector};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PangStatus {
    Ok = 0,
    /// Input outside the mathematical domain of the operation.
    DomainError = 1,
    /// A required pointer argument was null.
    NullPointer = 2,
    /// Malformed string argument (not UTF-8, or unknown name).
    BadArgument = 3,
    /// Index out of range for the handle.
    OutOfRange = 4,
    /// Internal failure (unexpected panic).
    Internal = 5,
}

fn status_of(e: &Error) -> PangStatus {
    match e {
        Error::Domain(_) | Error::DimensionMismatch(..) => PangStatus::DomainError,
        Error::UnknownCheck(_) | Error::UnknownTable(_) | Error::Parse(_) => PangStatus::BadArgument,
    }
}

fn guarded(f: impl FnOnce() -> PangStatus) -> PangStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PangStatus::Internal)
}

unsafe fn read_vector(ptr: *const f64, dim: usize) -> Option<Vector> {
    if ptr.is_null() || dim == 0 {
        return None;
    }
    let coords = std::slice::from_raw_parts(ptr, dim).to_vec();
    Vector::new(coords).ok()
}

macro_rules! write_out {
    ($out:ident, $value:expr) => {{
        if $out.is_null() {
            return PangStatus::NullPointer;
        }
        unsafe { *$out = $value };
        PangStatus::Ok
    }};
}

macro_rules! try_ffi {
    ($expr:expr, $out:ident) => {
        match $expr {
            Ok(v) => write_out!($out, v),
            Err(e) => status_of(&e),
        }
    };
}

// ------------------------------------------------------------ special fns

/// Complete elliptic integral of the first kind, modulus `r` in [0,1).
#[no_mangle]
pub unsafe extern "C" fn pang_ell_k(r: f64, out: *mut f64) -> PangStatus {
    guarded(|| try_ffi!(special::ell_k(r), out))
}

/// Grotzsch modulus `mu(r)`, `r` in (0,1).
#[no_mangle]
pub unsafe extern "C" fn pang_mu(r: f64, out: *mut f64) -> PangStatus {
    guarded(|| try_ffi!(special::mu(r), out))
}

/// Inverse of the Grotzsch modulus, `y > 0`.
#[no_mangle]
pub unsafe extern "C" fn pang_mu_inv(y: f64, out: *mut f64) -> PangStatus {
    guarded(|| try_ffi!(special::mu_inv(y), out))
}

/// Distortion function `phi_K(r) = mu^{-1}(mu(r)/K)`, `K >= 1`, `r` in (0,1).
#[no_mangle]
pub unsafe extern "C" fn pang_phi(k: f64, r: f64, out: *mut f64) -> PangStatus {
    guarded(|| match Distortion::new(k) {
        Ok(kk) => try_ffi!(special::phi(kk, r), out),
        Err(e) => status_of(&e),
    })
}

/// Explicit minorant `p(r) = 1/cosh(arcosh(1/r)/K)` of `phi_K`.
#[no_mangle]
pub unsafe extern "C" fn pang_minorant_p(k: f64, r: f64, out: *mut f64) -> PangStatus {
    guarded(|| match Distortion::new(k) {
        Ok(kk) => try_ffi!(special::minorant_p(kk, r), out),
        Err(e) => status_of(&e),
    })
}

/// Growth constant `c3(K) = 2 artanh(p(t0))`.
#[no_mangle]
pub unsafe extern "C" fn pang_c3(k: f64, out: *mut f64) -> PangStatus {
    guarded(|| match Distortion::new(k) {
        Ok(kk) => write_out!(out, special::c3(kk)),
        Err(e) => status_of(&e),
    })
}

/// `c1(K) = (1/K)^{K/(K-1)}`, `K > 1`.
#[no_mangle]
pub unsafe extern "C" fn pang_c1(k: f64, out: *mut f64) -> PangStatus {
    guarded(|| try_ffi!(special::c1(k), out))
}

/// Planar majorant `exp(pi (K - 1/K))` of the Grotzsch ring constant.
#[no_mangle]
pub unsafe extern "C" fn pang_lambda_bound(k: f64, out: *mut f64) -> PangStatus {
    guarded(|| match Distortion::new(k) {
        Ok(kk) => write_out!(out, special::lambda_bound(kk)),
        Err(e) => status_of(&e),
    })
}

/// Distortion constant `c(K) = 2^{K-1} K^K exp(4K(K+1) sqrt(K-1))`.
#[no_mangle]
pub unsafe extern "C" fn pang_c_qc(k: f64, out: *mut f64) -> PangStatus {
    guarded(|| match Distortion::new(k) {
        Ok(kk) => write_out!(out, special::c_qc(kk)),
        Err(e) => status_of(&e),
    })
}

/// The constant `t0 = (e-1)/(e+1)`.
#[no_mangle]
pub unsafe extern "C" fn pang_t0() -> f64 {
    special::t0()
}

// ----------------------------------------------------------- metrics etc.

/// p-angular distance between two nonzero vectors of dimension `dim`.
#[no_mangle]
pub unsafe extern "C" fn pang_p_angular(
    x: *const f64,
    y: *const f64,
    dim: usize,
    p: f64,
    out: *mut f64,
) -> PangStatus {
    guarded(|| {
        let (Some(x), Some(y)) = (unsafe { read_vector(x, dim) }, unsafe { read_vector(y, dim) })
        else {
            return PangStatus::NullPointer;
        };
        let Ok(p) = PExponent::new(p) else {
            return PangStatus::DomainError;
        };
        try_ffi!(metrics::p_angular(&x, &y, p), out)
    })
}

/// Distance-ratio metric `j(x,y)` on punctured space.
#[no_mangle]
pub unsafe extern "C" fn pang_j_metric(x: *const f64, y: *const f64, dim: usize, out: *mut f64) -> PangStatus {
    guarded(|| {
        let (Some(x), Some(y)) = (unsafe { read_vector(x, dim) }, unsafe { read_vector(y, dim) })
        else {
            return PangStatus::NullPointer;
        };
        try_ffi!(metrics::j_metric(&x, &y), out)
    })
}

/// The ratio `Q(x,y)` for exponents `0 < a <= 1 <= b`; requires |x| <= |y|.
#[no_mangle]
pub unsafe extern "C" fn pang_q_ratio(
    x: *const f64,
    y: *const f64,
    dim: usize,
    a: f64,
    b: f64,
    out: *mut f64,
) -> PangStatus {
    guarded(|| {
        let (Some(x), Some(y)) = (unsafe { read_vector(x, dim) }, unsafe { read_vector(y, dim) })
        else {
            return PangStatus::NullPointer;
        };
        let Ok(e) = RadialExponents::new(a, b) else {
            return PangStatus::DomainError;
        };
        try_ffi!(metrics::q_ratio(&x, &y, e), out)
    })
}

/// Radial power map `A_{a,b}`; writes `dim` coordinates to `out`.
#[no_mangle]
pub unsafe extern "C" fn pang_radial_map(
    x: *const f64,
    dim: usize,
    a: f64,
    b: f64,
    out: *mut f64,
) -> PangStatus {
    guarded(|| {
        let Some(x) = (unsafe { read_vector(x, dim) }) else {
            return PangStatus::NullPointer;
        };
        if out.is_null() {
            return PangStatus::NullPointer;
        }
        let Ok(e) = RadialExponents::new(a, b) else {
            return PangStatus::DomainError;
        };
        match pangular::radial_map(&x, e) {
            Ok(v) => {
                unsafe { ptr::copy_nonoverlapping(v.coords().as_ptr(), out, dim) };
                PangStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// All four alpha_p bounds for one pair. Bounds that are undefined for the
/// input (B and K outside p in (0,1); K at x = y) are written as NaN.
#[no_mangle]
pub unsafe extern "C" fn pang_bounds(
    x: *const f64,
    y: *const f64,
    dim: usize,
    p: f64,
    m: *mut f64,
    d: *mut f64,
    b: *mut f64,
    k: *mut f64,
) -> PangStatus {
    guarded(|| {
        let (Some(x), Some(y)) = (unsafe { read_vector(x, dim) }, unsafe { read_vector(y, dim) })
        else {
            return PangStatus::NullPointer;
        };
        if m.is_null() || d.is_null() || b.is_null() || k.is_null() {
            return PangStatus::NullPointer;
        }
        let Ok(p) = PExponent::new(p) else {
            return PangStatus::DomainError;
        };
        match bounds::all_bounds(&x, &y, p) {
            Ok(set) => {
                unsafe {
                    *m = set.m;
                    *d = set.d;
                    *b = set.b.unwrap_or(f64::NAN);
                    *k = set.k.unwrap_or(f64::NAN);
                }
                PangStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

// ------------------------------------------------------------ verification

/// Opaque handle holding the reports of one verification run.
pub struct PangReports {
    names: Vec<CString>,
    reports: Vec<CheckReport>,
}

/// Summary statistics of one check report.
#[repr(C)]
pub struct PangReportStats {
    /// 1 if the check passed (zero violations).
    pub passed: i32,
    pub samples: u64,
    pub violations: u64,
    /// Worst signed slack; <= 0 for passing checks.
    pub max_violation: f64,
    pub seed: u64,
}

/// Run every check whose name starts with `suite` ("all" runs everything).
/// On success writes a fresh handle to `out`.
#[no_mangle]
pub unsafe extern "C" fn pang_verify_run(
    suite: *const c_char,
    samples: u64,
    seed: u64,
    out: *mut *mut PangReports,
) -> PangStatus {
    guarded(|| {
        if suite.is_null() || out.is_null() {
            return PangStatus::NullPointer;
        }
        let Ok(suite) = unsafe { CStr::from_ptr(suite) }.to_str() else {
            return PangStatus::BadArgument;
        };
        match verify::run_prefix(suite, samples, seed) {
            Ok(reports) => {
                let names = reports
                    .iter()
                    .map(|r| CString::new(r.name).expect("check names have no NUL"))
                    .collect();
                let handle = Box::new(PangReports { names, reports });
                unsafe { *out = Box::into_raw(handle) };
                PangStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of reports in the handle.
#[no_mangle]
pub unsafe extern "C" fn pang_reports_len(handle: *const PangReports) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { &*handle }.reports.len()
}

/// Borrowed check name; valid until the handle is freed. Null on bad index.
#[no_mangle]
pub unsafe extern "C" fn pang_report_name(handle: *const PangReports, index: usize) -> *const c_char {
    if handle.is_null() {
        return ptr::null();
    }
    let h = unsafe { &*handle };
    match h.names.get(index) {
        Some(name) => name.as_ptr(),
        None => ptr::null(),
    }
}

/// Summary statistics of the report at `index`.
#[no_mangle]
pub unsafe extern "C" fn pang_report_stats(
    handle: *const PangReports,
    index: usize,
    out: *mut PangReportStats,
) -> PangStatus {
    guarded(|| {
        if handle.is_null() || out.is_null() {
            return PangStatus::NullPointer;
        }
        let h = unsafe { &*handle };
        let Some(r) = h.reports.get(index) else {
            return PangStatus::OutOfRange;
        };
        unsafe {
            *out = PangReportStats {
                passed: r.passed() as i32,
                samples: r.samples,
                violations: r.violations,
                max_violation: r.max_violation,
                seed: r.seed,
            };
        }
        PangStatus::Ok
    })
}

/// Release a reports handle. Passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn pang_reports_free(handle: *mut PangReports) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}
