//! C interface to the `awdaha` engine.
//!
//! Elements are passed around as opaque `AwdahaPoly` handles created by
//! [`awdaha_parse`] and released with [`awdaha_poly_free`]. Every fallible
//! function returns an [`AwdahaStatus`]; on failure a description is kept in
//! thread-local storage and can be read with [`awdaha_last_error`].
//! Strings returned to the caller must be released with
//! [`awdaha_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use awdaha::algebras::{algebra, Family};
use awdaha::coeff_matrix::CoeffMatrix;
use awdaha::morphisms::{braid, psi, BraidGen};
use awdaha::verify::run_suite;
use awdaha::{Error, NCPoly};

/// Result codes. `AWDAHA_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwdahaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    UnknownName = 5,
    AlphabetMismatch = 6,
    DivisionByZero = 7,
    NonTermination = 8,
    NotInT = 9,
    AxisError = 10,
    MissingImage = 11,
    SpecFormat = 12,
    VerificationFailed = 13,
    Panic = 14,
}

/// Which algebra an element lives in.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwdahaAlgebra {
    /// The universal Askey-Wilson algebra.
    Delta = 0,
    /// The universal DAHA of type (C1v, C1).
    Hhat = 1,
}

/// Braid group generators.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwdahaBraid {
    Rho = 0,
    Sigma = 1,
    Tau = 2,
}

/// Opaque element handle.
pub struct AwdahaPoly {
    family: Family,
    poly: NCPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> AwdahaStatus {
    match e {
        Error::DivisionByZero => AwdahaStatus::DivisionByZero,
        Error::AlphabetMismatch => AwdahaStatus::AlphabetMismatch,
        Error::MissingImage(_) => AwdahaStatus::MissingImage,
        Error::NonTermination { .. } => AwdahaStatus::NonTermination,
        Error::UnknownName(_) => AwdahaStatus::UnknownName,
        Error::AxisError(_) => AwdahaStatus::AxisError,
        Error::NotInT(_) => AwdahaStatus::NotInT,
        Error::Parse { .. } => AwdahaStatus::Parse,
        Error::SpecFormat { .. } => AwdahaStatus::SpecFormat,
    }
}

struct Fail(AwdahaStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AwdahaStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AwdahaStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AwdahaStatus::Panic
        }
    }
}

fn family(a: AwdahaAlgebra) -> Family {
    match a {
        AwdahaAlgebra::Delta => Family::Delta,
        AwdahaAlgebra::Hhat => Family::Hhat,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(AwdahaStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(AwdahaStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn read_poly<'a>(p: *const AwdahaPoly) -> Result<&'a AwdahaPoly, Fail> {
    p.as_ref().ok_or_else(|| Fail(AwdahaStatus::NullPointer, "null element handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(AwdahaStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_poly(out: *mut *mut AwdahaPoly, family: Family, poly: NCPoly) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(AwdahaStatus::NullPointer, "null output pointer".into()));
    }
    out.write(Box::into_raw(Box::new(AwdahaPoly { family, poly })));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(AwdahaStatus::InvalidArgument, "interior NUL in output".into()))?;
    write_out(out, c.into_raw())
}

fn same_family(a: &AwdahaPoly, b: &AwdahaPoly) -> Result<(), Fail> {
    if a.family == b.family {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch.into())
    }
}

/// Message describing the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn awdaha_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn awdaha_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `text` in the naming scope of `alg` without normalizing.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_parse(alg: AwdahaAlgebra, text: *const c_char, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let f = family(alg);
        let poly = algebra(f, false).parse(read_str(text)?)?;
        write_poly(out, f, poly)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn awdaha_poly_free(p: *mut AwdahaPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn awdaha_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Normal form of `p`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_normalize(p: *const AwdahaPoly, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let p = read_poly(p)?;
        let n = algebra(p.family, false).normalize(&p.poly)?;
        write_poly(out, p.family, n)
    })
}

/// Normal form of `a * b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_mul(a: *const AwdahaPoly, b: *const AwdahaPoly, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let (a, b) = (read_poly(a)?, read_poly(b)?);
        same_family(a, b)?;
        let r = algebra(a.family, false).mul(&a.poly, &b.poly)?;
        write_poly(out, a.family, r)
    })
}

/// `a + b`, unnormalized.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_add(a: *const AwdahaPoly, b: *const AwdahaPoly, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let (a, b) = (read_poly(a)?, read_poly(b)?);
        same_family(a, b)?;
        write_poly(out, a.family, a.poly.try_add(&b.poly)?)
    })
}

/// `a - b`, unnormalized.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_sub(a: *const AwdahaPoly, b: *const AwdahaPoly, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let (a, b) = (read_poly(a)?, read_poly(b)?);
        same_family(a, b)?;
        write_poly(out, a.family, a.poly.try_sub(&b.poly)?)
    })
}

/// Writes whether `a` and `b` have the same normal form.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_equal(a: *const AwdahaPoly, b: *const AwdahaPoly, out: *mut bool) -> AwdahaStatus {
    guard(|| {
        let (a, b) = (read_poly(a)?, read_poly(b)?);
        same_family(a, b)?;
        let diff = algebra(a.family, false).normalize(&a.poly.try_sub(&b.poly)?)?;
        write_out(out, diff.is_zero())
    })
}

/// Writes the algebra an element belongs to.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_poly_algebra(p: *const AwdahaPoly, out: *mut AwdahaAlgebra) -> AwdahaStatus {
    guard(|| {
        let p = read_poly(p)?;
        let a = match p.family {
            Family::Delta => AwdahaAlgebra::Delta,
            Family::Hhat => AwdahaAlgebra::Hhat,
        };
        write_out(out, a)
    })
}

/// Text form of `p`, in the syntax accepted by [`awdaha_parse`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_to_string(p: *const AwdahaPoly, out: *mut *mut c_char) -> AwdahaStatus {
    guard(|| write_string(out, read_poly(p)?.poly.to_string()))
}

/// Image of an Askey-Wilson element in the DAHA.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_psi(p: *const AwdahaPoly, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let p = read_poly(p)?;
        if p.family != Family::Delta {
            return Err(Fail(AwdahaStatus::InvalidArgument, "psi expects an Askey-Wilson element".into()));
        }
        write_poly(out, Family::Hhat, psi()?.apply(&p.poly)?)
    })
}

/// Image of `p` under a braid group generator acting on its algebra.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_braid(gen: AwdahaBraid, p: *const AwdahaPoly, out: *mut *mut AwdahaPoly) -> AwdahaStatus {
    guard(|| {
        let p = read_poly(p)?;
        let g = match gen {
            AwdahaBraid::Rho => BraidGen::Rho,
            AwdahaBraid::Sigma => BraidGen::Sigma,
            AwdahaBraid::Tau => BraidGen::Tau,
        };
        write_poly(out, p.family, braid(g, p.family)?.apply(&p.poly)?)
    })
}

/// Coefficient matrix of a DAHA element as a JSON array of
/// `{"i", "j", "entry"}` objects.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_coeff_matrix_json(p: *const AwdahaPoly, out: *mut *mut c_char) -> AwdahaStatus {
    guard(|| {
        let p = read_poly(p)?;
        if p.family != Family::Hhat {
            return Err(Fail(AwdahaStatus::InvalidArgument, "coefficient matrices are defined on DAHA elements".into()));
        }
        write_string(out, CoeffMatrix::of(&p.poly)?.to_json().to_string())
    })
}

/// Number of irreducible words of length exactly `len`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awdaha_basis_count(alg: AwdahaAlgebra, len: usize, out: *mut usize) -> AwdahaStatus {
    guard(|| write_out(out, algebra(family(alg), false).enumerate_basis_exact(len).len()))
}

/// Runs a verification suite by name. Returns `AWDAHA_STATUS_VERIFICATION_FAILED`
/// if any check fails. If `report_json` is not NULL it receives the report.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `report_json` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn awdaha_verify(suite: *const c_char, report_json: *mut *mut c_char) -> AwdahaStatus {
    guard(|| {
        let report = run_suite(read_str(suite)?)?;
        if !report_json.is_null() {
            let json = serde_json::to_string(&report).map_err(|e| Fail(AwdahaStatus::InvalidArgument, e.to_string()))?;
            write_string(report_json, json)?;
        }
        if report.passed() {
            Ok(())
        } else {
            let n = report.failures().count();
            Err(Fail(AwdahaStatus::VerificationFailed, format!("{n} checks failed in {}", report.name)))
        }
    })
}
