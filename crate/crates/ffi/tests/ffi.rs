//! Exercises the C ABI from Rust, including the failure paths.

use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use invweyl_ffi::*;
use serde_json::Value;

fn last_error() -> String {
    let p = invweyl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn to_json(b: *const InvweylBasis) -> Value {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { invweyl_basis_to_json(b, &mut s) }, InvweylStatus::Ok);
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { invweyl_string_free(s) };
    v
}

#[test]
fn bann_round_trip() {
    let g = CString::new("S3").unwrap();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { invweyl_bann_new(g.as_ptr(), &mut b) }, InvweylStatus::Ok);
    assert!(invweyl_last_error_message().is_null());
    let mut len = 0;
    assert_eq!(unsafe { invweyl_basis_len(b, &mut len) }, InvweylStatus::Ok);
    assert_eq!(len, 4);
    assert_eq!(to_json(b)["dim"], 4);
    unsafe { invweyl_basis_free(b) };
}

#[test]
fn canonical_and_specht() {
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { invweyl_canonical_basis_new(4, &mut b) }, InvweylStatus::Ok);
    let mut len = 0;
    unsafe { invweyl_basis_len(b, &mut len) };
    assert_eq!(len, 10);
    assert_eq!(to_json(b)["vectors"].as_array().unwrap().len(), 10);
    unsafe { invweyl_basis_free(b) };

    let blocks = CString::new("{1,2,3},{4}").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { invweyl_specht_new(blocks.as_ptr(), 1, &mut s) }, InvweylStatus::Ok);
    assert_eq!(to_json(s)["degree"], 3);
    unsafe { invweyl_basis_free(s) };
}

#[test]
fn error_paths() {
    let mut b = ptr::null_mut();
    let bad = CString::new("Q7").unwrap();
    assert_eq!(unsafe { invweyl_bann_new(bad.as_ptr(), &mut b) }, InvweylStatus::InvalidArgument);
    assert!(b.is_null());
    assert!(last_error().contains("Q7"));

    assert_eq!(unsafe { invweyl_bann_new(ptr::null(), &mut b) }, InvweylStatus::NullPointer);
    let g = CString::new("S2").unwrap();
    assert_eq!(unsafe { invweyl_bann_new(g.as_ptr(), ptr::null_mut()) }, InvweylStatus::NullPointer);

    let invalid = [0xffu8, 0xfe, 0];
    assert_eq!(unsafe { invweyl_bann_new(invalid.as_ptr().cast(), &mut b) }, InvweylStatus::InvalidUtf8);

    assert_eq!(unsafe { invweyl_canonical_basis_new(0, &mut b) }, InvweylStatus::InvalidArgument);
    let overlapping = CString::new("{1,2},{2}").unwrap();
    assert_eq!(unsafe { invweyl_specht_new(overlapping.as_ptr(), 1, &mut b) }, InvweylStatus::InvalidArgument);
    let blocks = CString::new("{1,2}").unwrap();
    assert_eq!(unsafe { invweyl_specht_new(blocks.as_ptr(), 0, &mut b) }, InvweylStatus::InvalidArgument);

    let mut len = 0;
    assert_eq!(unsafe { invweyl_basis_len(ptr::null(), &mut len) }, InvweylStatus::NullPointer);
    unsafe {
        invweyl_basis_free(ptr::null_mut());
        invweyl_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(invweyl_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_symbol() {
    let header = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/invweyl.h")).unwrap();
    for sym in [
        "invweyl_bann_new",
        "invweyl_canonical_basis_new",
        "invweyl_specht_new",
        "invweyl_basis_len",
        "invweyl_basis_to_json",
        "invweyl_string_free",
        "invweyl_basis_free",
        "invweyl_last_error_message",
        "invweyl_version",
        "typedef struct InvweylBasis InvweylBasis;",
        "INVWEYL_STATUS_PANIC = 5",
    ] {
        assert!(header.contains(sym), "{sym} missing from header");
    }
}

/// Compiles the C smoke program against the header and the static library
/// when both a C compiler and the archive are available.
#[test]
fn c_smoke_program() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let Some(target) = std::env::current_exe().ok().and_then(|p| p.parent()?.parent().map(PathBuf::from)) else {
        return;
    };
    let lib = target.join("libinvweyl_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler not available");
        return;
    }
    let exe = target.join("invweyl_c_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok 4 10");
}
