//! C ABI over `lrq`.
//!
//! Every function returns an [`LrqStatus`] and writes its result through an
//! out-pointer. Graph sums are opaque heap handles released with
//! [`lrq_graph_sum_free`]; strings handed out by the library are released
//! with [`lrq_string_free`]. After a non-OK status,
//! [`lrq_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lrq::airy::airy_correlator;
use lrq::cli::parse_graph_sum;
use lrq::complexes::{cohomology_dim, d_h, d_h_reg, Space};
use lrq::freemodule::fmt_rational;
use lrq::hopfops::{antipode, counit, delta_h_sum, star_h_sums, GraphSum};
use lrq::subalgebras::star_reg;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrqStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    DomainError = 3,
    Utf8Error = 4,
    Panic = 5,
}

/// Which product [`lrq_graph_sum_product`] computes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrqAlgebra {
    /// The quantized product on all graphs.
    Full = 0,
    /// The product followed by projection to regular graphs.
    Reg = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrqSpace {
    Full = 0,
    Reg = 1,
    TopRec = 2,
}

/// Opaque handle to a graph sum.
pub struct LrqGraphSum {
    inner: GraphSum,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(LrqStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LrqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LrqStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LrqStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(LrqStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(LrqStatus::Utf8Error, e.to_string()))
}

unsafe fn handle<'a>(p: *const LrqGraphSum) -> Result<&'a GraphSum, Fail> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| Fail(LrqStatus::NullPointer, "null graph sum".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(LrqStatus::NullPointer, "null out-pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_sum(out: *mut *mut LrqGraphSum, inner: GraphSum) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(LrqStatus::NullPointer, "null out-pointer".into()));
    }
    out.write(Box::into_raw(Box::new(LrqGraphSum { inner })));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(LrqStatus::Utf8Error, e.to_string()))?;
    if out.is_null() {
        return Err(Fail(LrqStatus::NullPointer, "null out-pointer".into()));
    }
    out.write(c.into_raw());
    Ok(())
}

/// Parses the sum grammar, e.g. `"1/2*(|v|) - (|o|)"`.
///
/// # Safety
/// `input` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_parse(input: *const c_char, out: *mut *mut LrqGraphSum) -> LrqStatus {
    guard(|| {
        let s = text(input)?;
        let x = parse_graph_sum(s).map_err(|e| Fail(LrqStatus::ParseError, e.to_string()))?;
        put_sum(out, x)
    })
}

/// # Safety
/// `sum` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_free(sum: *mut LrqGraphSum) {
    if !sum.is_null() {
        drop(Box::from_raw(sum));
    }
}

/// Canonical text form; free the result with [`lrq_string_free`].
///
/// # Safety
/// `sum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_to_string(sum: *const LrqGraphSum, out: *mut *mut c_char) -> LrqStatus {
    guard(|| put_string(out, handle(sum)?.to_string()))
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_product(
    a: *const LrqGraphSum,
    b: *const LrqGraphSum,
    algebra: LrqAlgebra,
    out: *mut *mut LrqGraphSum,
) -> LrqStatus {
    guard(|| {
        let (x, y) = (handle(a)?, handle(b)?);
        let p = match algebra {
            LrqAlgebra::Full => star_h_sums(x, y),
            LrqAlgebra::Reg => star_reg(x, y),
        };
        put_sum(out, p)
    })
}

/// The coproduct as text in the tensor grammar (`a@b + ...`).
///
/// # Safety
/// `sum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_coproduct(sum: *const LrqGraphSum, out: *mut *mut c_char) -> LrqStatus {
    guard(|| put_string(out, delta_h_sum(handle(sum)?).to_string()))
}

/// # Safety
/// `sum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_antipode(sum: *const LrqGraphSum, out: *mut *mut LrqGraphSum) -> LrqStatus {
    guard(|| put_sum(out, antipode(handle(sum)?)))
}

/// The counit as an exact rational in text form (`"n"` or `"n/d"`).
///
/// # Safety
/// `sum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_counit(sum: *const LrqGraphSum, out: *mut *mut c_char) -> LrqStatus {
    guard(|| put_string(out, fmt_rational(&counit(handle(sum)?))))
}

/// The quantum differential; `LRQ_SPACE_REG` and `LRQ_SPACE_TOP_REC` both
/// project to regular graphs.
///
/// # Safety
/// `sum` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_dh(
    sum: *const LrqGraphSum,
    space: LrqSpace,
    out: *mut *mut LrqGraphSum,
) -> LrqStatus {
    guard(|| {
        let x = handle(sum)?;
        let d = match space {
            LrqSpace::Full => d_h(x),
            LrqSpace::Reg | LrqSpace::TopRec => d_h_reg(x),
        };
        put_sum(out, d)
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_graph_sum_equal(
    a: *const LrqGraphSum,
    b: *const LrqGraphSum,
    out: *mut bool,
) -> LrqStatus {
    guard(|| {
        let eq = handle(a)? == handle(b)?;
        put(out, eq)
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_cohomology_dim(order: usize, genus: usize, space: LrqSpace, out: *mut usize) -> LrqStatus {
    guard(|| {
        let space = match space {
            LrqSpace::Full => Space::Full,
            LrqSpace::Reg => Space::Reg,
            LrqSpace::TopRec => Space::TopRec,
        };
        put(out, cohomology_dim(order, genus, space))
    })
}

/// `W^g_k` on the Airy curve as text, e.g. `"1/16 * p^-4"`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrq_airy_correlator(genus: u32, legs: u32, out: *mut *mut c_char) -> LrqStatus {
    guard(|| {
        let w = airy_correlator(genus, legs).map_err(|e| Fail(LrqStatus::DomainError, e.to_string()))?;
        put_string(out, w.to_string())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread (empty after success).
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn lrq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
