//! Exercises the C ABI from Rust through raw pointers.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use lrq_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lrq_string_free(p);
    s
}

unsafe fn parse(s: &str) -> *mut LrqGraphSum {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(lrq_graph_sum_parse(c.as_ptr(), &mut out), LrqStatus::Ok);
    out
}

unsafe fn render(h: *const LrqGraphSum) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(lrq_graph_sum_to_string(h, &mut s), LrqStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lrq_last_error_message()).to_str().unwrap().to_owned() }
}

#[test]
fn product_matches_golden() {
    unsafe {
        let l = parse("(|o|)");
        let mut p = ptr::null_mut();
        assert_eq!(lrq_graph_sum_product(l, l, LrqAlgebra::Full, &mut p), LrqStatus::Ok);
        assert_eq!(render(p), "(|o(|o|)) + ((|o|)o|)");
        let mut r = ptr::null_mut();
        assert_eq!(lrq_graph_sum_product(l, l, LrqAlgebra::Reg, &mut r), LrqStatus::Ok);
        assert_eq!(render(r), "0");
        lrq_graph_sum_free(r);
        lrq_graph_sum_free(p);
        lrq_graph_sum_free(l);
    }
}

#[test]
fn hopf_operations() {
    unsafe {
        let t = parse("(|v|)");
        let mut s = ptr::null_mut();
        assert_eq!(lrq_graph_sum_antipode(t, &mut s), LrqStatus::Ok);
        assert_eq!(render(s), "-(|v|)");
        let mut d = ptr::null_mut();
        assert_eq!(lrq_graph_sum_dh(t, LrqSpace::Full, &mut d), LrqStatus::Ok);
        assert_eq!(render(d), "(|o|)");
        let mut c = ptr::null_mut();
        assert_eq!(lrq_graph_sum_coproduct(d, &mut c), LrqStatus::Ok);
        assert_eq!(take_string(c), "|@(|o|) + (|o|)@|");
        let mut e = ptr::null_mut();
        let unit = parse("1/2*| + (|v|)");
        assert_eq!(lrq_graph_sum_counit(unit, &mut e), LrqStatus::Ok);
        assert_eq!(take_string(e), "1/2");
        let mut eq = false;
        let l = parse("(|o|)");
        assert_eq!(lrq_graph_sum_equal(d, l, &mut eq), LrqStatus::Ok);
        assert!(eq);
        for h in [t, s, d, unit, l] {
            lrq_graph_sum_free(h);
        }
    }
}

#[test]
fn cohomology_and_airy() {
    unsafe {
        let mut dim = 99usize;
        assert_eq!(lrq_cohomology_dim(2, 1, LrqSpace::TopRec, &mut dim), LrqStatus::Ok);
        assert_eq!(dim, 1);
        let mut w = ptr::null_mut();
        assert_eq!(lrq_airy_correlator(1, 1, &mut w), LrqStatus::Ok);
        assert_eq!(take_string(w), "1/16 * p^-4");
        assert_eq!(lrq_airy_correlator(0, 2, &mut w), LrqStatus::DomainError);
        assert!(last_error().contains("unstable"));
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let bad = CString::new("(|v|").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(lrq_graph_sum_parse(bad.as_ptr(), &mut out), LrqStatus::ParseError);
        assert!(out.is_null());
        assert_eq!(
            last_error(),
            "syntax error at offset 4: expected ')', found end of input"
        );
        assert_eq!(lrq_graph_sum_parse(ptr::null(), &mut out), LrqStatus::NullPointer);
        let ok = CString::new("|").unwrap();
        assert_eq!(
            lrq_graph_sum_parse(ok.as_ptr(), ptr::null_mut()),
            LrqStatus::NullPointer
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            lrq_graph_sum_parse(invalid.as_ptr().cast(), &mut out),
            LrqStatus::Utf8Error
        );
        assert_eq!(
            lrq_graph_sum_to_string(ptr::null(), &mut ptr::null_mut()),
            LrqStatus::NullPointer
        );
        lrq_graph_sum_free(ptr::null_mut());
        lrq_string_free(ptr::null_mut());
        let h = parse("|");
        assert_eq!(last_error(), "");
        lrq_graph_sum_free(h);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/lrq.h")).unwrap();
    for name in [
        "lrq_graph_sum_parse",
        "lrq_graph_sum_free",
        "lrq_graph_sum_to_string",
        "lrq_graph_sum_product",
        "lrq_graph_sum_coproduct",
        "lrq_graph_sum_antipode",
        "lrq_graph_sum_counit",
        "lrq_graph_sum_dh",
        "lrq_graph_sum_equal",
        "lrq_cohomology_dim",
        "lrq_airy_correlator",
        "lrq_string_free",
        "lrq_last_error_message",
        "typedef struct LrqGraphSum LrqGraphSum",
        "LRQ_STATUS_PARSE_ERROR = 2",
    ] {
        assert!(header.contains(name), "{name} missing from lrq.h");
    }
}
