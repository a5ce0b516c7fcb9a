use std::ffi::{c_char, CStr, CString};
use std::ptr;

use awdaha_ffi::*;

fn parse(alg: AwdahaAlgebra, text: &str) -> *mut AwdahaPoly {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { awdaha_parse(alg, c.as_ptr(), &mut out) };
    assert_eq!(st, AwdahaStatus::Ok, "{text}");
    out
}

fn take_string(s: *mut c_char) -> String {
    let r = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { awdaha_string_free(s) };
    r
}

fn show(p: *const AwdahaPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { awdaha_to_string(p, &mut s) }, AwdahaStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    let p = awdaha_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn normalize_reorders_delta_word() {
    let p = parse(AwdahaAlgebra::Delta, "B*A");
    let mut n = ptr::null_mut();
    assert_eq!(unsafe { awdaha_normalize(p, &mut n) }, AwdahaStatus::Ok);
    let expected = parse(AwdahaAlgebra::Delta, "q^2*A*B + q*(q^2 - q^-2)*C - q*(q - q^-1)*gamma");
    let mut eq = false;
    assert_eq!(unsafe { awdaha_equal(n, expected, &mut eq) }, AwdahaStatus::Ok);
    assert!(eq, "{}", show(n));
    unsafe {
        awdaha_poly_free(p);
        awdaha_poly_free(n);
        awdaha_poly_free(expected);
    }
}

#[test]
fn arithmetic_round_trip() {
    let a = parse(AwdahaAlgebra::Hhat, "t0*t1");
    let b = parse(AwdahaAlgebra::Hhat, "t1");
    let mut prod = ptr::null_mut();
    let mut sum = ptr::null_mut();
    let mut diff = ptr::null_mut();
    unsafe {
        assert_eq!(awdaha_mul(a, b, &mut prod), AwdahaStatus::Ok);
        assert_eq!(awdaha_add(prod, a, &mut sum), AwdahaStatus::Ok);
        assert_eq!(awdaha_sub(sum, a, &mut diff), AwdahaStatus::Ok);
        let mut eq = false;
        assert_eq!(awdaha_equal(diff, prod, &mut eq), AwdahaStatus::Ok);
        assert!(eq);
        let mut fam = AwdahaAlgebra::Delta;
        assert_eq!(awdaha_poly_algebra(prod, &mut fam), AwdahaStatus::Ok);
        assert_eq!(fam, AwdahaAlgebra::Hhat);
        for p in [a, b, prod, sum, diff] {
            awdaha_poly_free(p);
        }
    }
}

#[test]
fn display_reparses() {
    let p = parse(AwdahaAlgebra::Delta, "C*B*A - q*alpha");
    let text = show(p);
    let back = parse(AwdahaAlgebra::Delta, &text);
    let mut eq = false;
    assert_eq!(unsafe { awdaha_equal(p, back, &mut eq) }, AwdahaStatus::Ok);
    assert!(eq);
    unsafe {
        awdaha_poly_free(p);
        awdaha_poly_free(back);
    }
}

#[test]
fn psi_lands_in_hhat() {
    let a = parse(AwdahaAlgebra::Delta, "A");
    let mut img = ptr::null_mut();
    assert_eq!(unsafe { awdaha_psi(a, &mut img) }, AwdahaStatus::Ok);
    let mut fam = AwdahaAlgebra::Delta;
    unsafe { awdaha_poly_algebra(img, &mut fam) };
    assert_eq!(fam, AwdahaAlgebra::Hhat);
    let expected = parse(AwdahaAlgebra::Hhat, "Y + Y^-1");
    let mut eq = false;
    assert_eq!(unsafe { awdaha_equal(img, expected, &mut eq) }, AwdahaStatus::Ok);
    assert!(eq, "{}", show(img));

    let h = parse(AwdahaAlgebra::Hhat, "t0");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { awdaha_psi(h, &mut out) }, AwdahaStatus::InvalidArgument);
    assert!(out.is_null());
    unsafe {
        awdaha_poly_free(a);
        awdaha_poly_free(img);
        awdaha_poly_free(expected);
        awdaha_poly_free(h);
    }
}

#[test]
fn braid_relation_through_handles() {
    // rho^3 and sigma^2 both conjugate Y by t0
    let y = parse(AwdahaAlgebra::Hhat, "Y");
    let apply = |g, x| {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { awdaha_braid(g, x, &mut out) }, AwdahaStatus::Ok);
        out
    };
    let r3 = apply(AwdahaBraid::Rho, apply(AwdahaBraid::Rho, apply(AwdahaBraid::Rho, y)));
    let s2 = apply(AwdahaBraid::Sigma, apply(AwdahaBraid::Sigma, y));
    let conj = parse(AwdahaAlgebra::Hhat, "t0^-1*Y*t0");
    let mut eq = false;
    assert_eq!(unsafe { awdaha_equal(r3, conj, &mut eq) }, AwdahaStatus::Ok);
    assert!(eq, "{}", show(r3));
    assert_eq!(unsafe { awdaha_equal(s2, conj, &mut eq) }, AwdahaStatus::Ok);
    assert!(eq, "{}", show(s2));
}

#[test]
fn coeff_matrix_json_parses() {
    let p = parse(AwdahaAlgebra::Hhat, "A");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { awdaha_coeff_matrix_json(p, &mut s) }, AwdahaStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert!(v.is_array() || v.is_object());
    unsafe { awdaha_poly_free(p) };
}

#[test]
fn basis_counts() {
    let mut n = 0usize;
    assert_eq!(unsafe { awdaha_basis_count(AwdahaAlgebra::Delta, 0, &mut n) }, AwdahaStatus::Ok);
    assert_eq!(n, 1);
    assert_eq!(unsafe { awdaha_basis_count(AwdahaAlgebra::Delta, 1, &mut n) }, AwdahaStatus::Ok);
    assert_eq!(n, 7);
}

#[test]
fn verify_suite_reports_json() {
    let name = CString::new("confluence-delta").unwrap();
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { awdaha_verify(name.as_ptr(), &mut json) }, AwdahaStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["name"], "confluence-delta");

    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { awdaha_verify(bad.as_ptr(), ptr::null_mut()) }, AwdahaStatus::UnknownName);
    assert!(last_error().contains("nope"));
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let bad = CString::new("A * (B").unwrap();
    assert_eq!(unsafe { awdaha_parse(AwdahaAlgebra::Delta, bad.as_ptr(), &mut out) }, AwdahaStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("parse error"));

    let unknown = CString::new("t0").unwrap();
    assert_ne!(unsafe { awdaha_parse(AwdahaAlgebra::Delta, unknown.as_ptr(), &mut out) }, AwdahaStatus::Ok);

    assert_eq!(unsafe { awdaha_parse(AwdahaAlgebra::Delta, ptr::null(), &mut out) }, AwdahaStatus::NullPointer);
    assert_eq!(unsafe { awdaha_normalize(ptr::null(), &mut out) }, AwdahaStatus::NullPointer);

    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { awdaha_parse(AwdahaAlgebra::Delta, invalid.as_ptr().cast(), &mut out) },
        AwdahaStatus::InvalidUtf8
    );

    let d = parse(AwdahaAlgebra::Delta, "A");
    let h = parse(AwdahaAlgebra::Hhat, "t0");
    assert_eq!(unsafe { awdaha_mul(d, h, &mut out) }, AwdahaStatus::AlphabetMismatch);
    assert_eq!(unsafe { awdaha_coeff_matrix_json(d, ptr::null_mut()) }, AwdahaStatus::InvalidArgument);

    let ok = parse(AwdahaAlgebra::Delta, "A");
    assert!(awdaha_last_error().is_null());
    unsafe {
        awdaha_poly_free(d);
        awdaha_poly_free(h);
        awdaha_poly_free(ok);
        awdaha_poly_free(ptr::null_mut());
        awdaha_string_free(ptr::null_mut());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(awdaha_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
