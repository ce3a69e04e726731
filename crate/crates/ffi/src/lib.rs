//! C ABI over the `complicial` library.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns a
//! [`ComplicialStatus`]; on anything but `Ok` or `Fail` a message is available
//! from [`complicial_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use complicial::budget::Budget;
use complicial::io::{self, ComplexDoc, Document, OmegaDoc, Payload, ReportDoc};
use complicial::lifting::{self, CheckReport};
use complicial::nerve::{self, Stratification};
use complicial::omega::OmegaCat;
use complicial::shapes::{self, Generated, GeneratorSpec};
use complicial::simplicial::StratifiedComplex;
use complicial::{fixtures, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplicialStatus {
    Ok = 0,
    /// The checked property does not hold.
    Fail = 1,
    NullArgument = 2,
    InvalidArgument = 3,
    ParseError = 4,
    InvalidInput = 5,
    BudgetExceeded = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplicialProperty {
    Complicial = 0,
    StrictComplicial = 1,
    Saturated = 2,
    /// Uses `param` as n.
    NTrivial = 3,
    Quasicategory = 4,
    /// Uses `param` as n.
    Coskeletal = 5,
}

/// A stratified simplicial set.
pub struct ComplicialComplex(Arc<StratifiedComplex>);

/// A strict ω-category given by tables.
pub struct ComplicialOmega(OmegaCat);

/// The outcome of a property check.
pub struct ComplicialReport(CheckReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ComplicialStatus {
    match e {
        Error::BudgetExceeded { .. } => ComplicialStatus::BudgetExceeded,
        Error::Parse { .. } => ComplicialStatus::ParseError,
        Error::InvalidParameters(_) | Error::UnknownSimplex(_) => ComplicialStatus::InvalidArgument,
        _ => ComplicialStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<ComplicialStatus, (ComplicialStatus, String)>) -> ComplicialStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            ComplicialStatus::Internal
        }
    }
}

fn lift<T>(r: complicial::Result<T>) -> Result<T, (ComplicialStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (ComplicialStatus, String) {
    (ComplicialStatus::NullArgument, "null argument".to_string())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (ComplicialStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (ComplicialStatus::InvalidArgument, "string is not UTF-8".to_string()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<ComplicialStatus, (ComplicialStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(ComplicialStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<ComplicialStatus, (ComplicialStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| (ComplicialStatus::Internal, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(ComplicialStatus::Ok)
}

fn budget_of(limit: u64) -> Budget {
    if limit == 0 {
        Budget::from_env()
    } else {
        Budget::new(limit)
    }
}

/// Message for the last error on this thread. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn complicial_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn complicial_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a complex document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_complex_parse(
    json: *const c_char,
    out: *mut *mut ComplicialComplex,
) -> ComplicialStatus {
    guard(|| {
        let doc = lift(io::parse(str_arg(json)?))?;
        match doc.payload {
            Payload::Complex(c) => put(out, ComplicialComplex(Arc::new(lift(c.to_complex())?))),
            other => Err((
                ComplicialStatus::InvalidInput,
                format!("expected a complex document, got {}", Document::new(other).kind()),
            )),
        }
    })
}

/// Prints a complex as a document. Free the result with [`complicial_string_free`].
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_complex_print(
    c: *const ComplicialComplex,
    out: *mut *mut c_char,
) -> ComplicialStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(null)?;
        let doc = Document::new(Payload::Complex(ComplexDoc::from_complex(&c.0)));
        put_string(out, io::print(&doc))
    })
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_complex_free(c: *mut ComplicialComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Nondegenerate simplices of dimension `dim`.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_complex_count(c: *const ComplicialComplex, dim: usize) -> usize {
    c.as_ref().map_or(0, |c| if dim <= c.0.bound() { c.0.count(dim) } else { 0 })
}

/// Dimension bound of the complex.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_complex_bound(c: *const ComplicialComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.bound())
}

/// Number of marked nondegenerate simplices.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_complex_marked(c: *const ComplicialComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.marked_ids().count())
}

/// A named shape; `standard`, `boundary`, `horn`, `admissible`, `primed`,
/// `double-primed`, `thin-top`, `sharp` or `saturation`. Generating inclusions
/// yield their codomain. Unused parameters are ignored.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_shape(
    name: *const c_char,
    n: i64,
    k: i64,
    m: i64,
    out: *mut *mut ComplicialComplex,
) -> ComplicialStatus {
    guard(|| {
        let name = str_arg(name)?;
        let bad = |what: &str| (ComplicialStatus::InvalidArgument, format!("{what} must be nonnegative"));
        let nat = |v: i64, what: &str| usize::try_from(v).map_err(|_| bad(what));
        let kk = || nat(k, "k");
        use GeneratorSpec as G;
        let spec = match name {
            "standard" => G::Standard { n: nat(n, "n")? },
            "boundary" => G::Boundary { n: nat(n, "n")? },
            "horn" => G::Horn { n: nat(n, "n")?, k: kk()? },
            "admissible" => G::Admissible { n: nat(n, "n")?, k: kk()? },
            "admissible-horn" => G::AdmissibleHorn { n: nat(n, "n")?, k: kk()? },
            "primed" => G::Primed { n: nat(n, "n")?, k: kk()? },
            "double-primed" => G::DoublePrimed { n: nat(n, "n")?, k: kk()? },
            "thin-top" => G::ThinTop { n: nat(n, "n")? },
            "sharp" => G::Sharp { n: nat(n, "n")? },
            "saturation" => G::Saturation { m: m as isize, n: n as isize },
            other => return Err((ComplicialStatus::InvalidArgument, format!("unknown shape `{other}`"))),
        };
        let x = match lift(shapes::make(&spec))? {
            Generated::Complex(x) => x,
            Generated::Inclusion(i) => i.codomain().as_ref().clone(),
        };
        put(out, ComplicialComplex(Arc::new(x)))
    })
}

/// Checks a property up to `bound`. Returns `Ok` or `Fail` with a report in `out`.
/// A `budget` of 0 uses the environment default.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_check(
    c: *const ComplicialComplex,
    property: ComplicialProperty,
    param: usize,
    bound: usize,
    budget: u64,
    out: *mut *mut ComplicialReport,
) -> ComplicialStatus {
    guard(|| {
        let x = &c.as_ref().ok_or_else(null)?.0;
        let mut b = budget_of(budget);
        let r = lift(match property {
            ComplicialProperty::Complicial => lifting::is_complicial(x, bound, &mut b),
            ComplicialProperty::StrictComplicial => lifting::is_strict_complicial(x, bound, &mut b),
            ComplicialProperty::Saturated => lifting::is_saturated(x, bound, &mut b),
            ComplicialProperty::NTrivial => lifting::n_triviality(x, param),
            ComplicialProperty::Quasicategory => lifting::is_quasicategory(x, bound, &mut b),
            ComplicialProperty::Coskeletal => lifting::sphere_fillers(x, param, bound, &mut b),
        })?;
        let passed = r.passed();
        put(out, ComplicialReport(r))?;
        Ok(if passed { ComplicialStatus::Ok } else { ComplicialStatus::Fail })
    })
}

/// # Safety
/// `r` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_report_passed(r: *const ComplicialReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.passed())
}

/// Prints a report, with its witness, as a document.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_report_print(
    r: *const ComplicialReport,
    out: *mut *mut c_char,
) -> ComplicialStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        put_string(out, io::print(&Document::new(Payload::Report(ReportDoc::from_report(&r.0)))))
    })
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_report_free(r: *mut ComplicialReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Parses an ω-category document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_omega_parse(
    json: *const c_char,
    out: *mut *mut ComplicialOmega,
) -> ComplicialStatus {
    guard(|| {
        let doc = lift(io::parse(str_arg(json)?))?;
        match doc.payload {
            Payload::OmegaCat(o) => put(out, ComplicialOmega(lift(o.to_omega())?)),
            other => Err((
                ComplicialStatus::InvalidInput,
                format!("expected an omega_cat document, got {}", Document::new(other).kind()),
            )),
        }
    })
}

/// A built-in fixture by name, such as `walking-iso` or `two-cell`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_omega_fixture(
    name: *const c_char,
    out: *mut *mut ComplicialOmega,
) -> ComplicialStatus {
    guard(|| put(out, ComplicialOmega(lift(fixtures::omega(str_arg(name)?))?)))
}

/// Prints an ω-category as a document.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_omega_print(
    c: *const ComplicialOmega,
    out: *mut *mut c_char,
) -> ComplicialStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(null)?;
        put_string(out, io::print(&Document::new(Payload::OmegaCat(OmegaDoc::from_omega(&c.0)))))
    })
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn complicial_omega_free(c: *mut ComplicialOmega) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// The Street nerve up to `bound` (0 for the default) with the named
/// stratification (`identity`, `saturated1` or `saturated2`).
///
/// # Safety
/// `c` must be a live handle, `stratification` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn complicial_nerve(
    c: *const ComplicialOmega,
    bound: usize,
    stratification: *const c_char,
    budget: u64,
    out: *mut *mut ComplicialComplex,
) -> ComplicialStatus {
    guard(|| {
        let c = &c.as_ref().ok_or_else(null)?.0;
        let s = lift(Stratification::from_name(str_arg(stratification)?))?;
        let bound = if bound == 0 { nerve::default_bound(c) } else { bound };
        let n = lift(nerve::nerve(c, bound, &s, &mut budget_of(budget)))?;
        put(out, ComplicialComplex(Arc::new(n.into_complex())))
    })
}
