//! C ABI for the fig8-splittings classifier.
//!
//! Every function returns a [`Fig8Status`] and writes results through out
//! pointers. Classifications are opaque handles owned by the caller and
//! released with [`fig8_classification_free`]; strings returned by the
//! library are released with [`fig8_string_free`].

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fig8_splittings::classify::{CountMethod, RatioBand, SpanningSurface};
use fig8_splittings::report::Report;
use fig8_splittings::{classify, moebius_count, validate, Classification, Error, EvenSlope, Frame, Slope};

/// Result codes. The non-zero input codes match the `fig8` CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fig8Status {
    Ok = 0,
    InvalidSlope = 2,
    ExceptionalFilling = 3,
    OddFilling = 4,
    Inconsistent = 5,
    NullPointer = 6,
    Overflow = 7,
    InvalidArgument = 8,
    Panic = 9,
}

impl From<&Error> for Fig8Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotASlope(..) | Error::InvalidFrame { .. } | Error::NotEvenSlope(..) => {
                Fig8Status::InvalidSlope
            }
            Error::ExceptionalFilling { .. } => Fig8Status::ExceptionalFilling,
            Error::OddFilling { .. } => Fig8Status::OddFilling,
            Error::Overflow => Fig8Status::Overflow,
            Error::Inconsistent(_) | Error::BoundTooSmall { .. } => Fig8Status::Inconsistent,
        }
    }
}

/// Ratio band of `p/q`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fig8Band {
    /// p/q < -3/2
    NegOuter = 0,
    /// -3/2 < p/q < -1/2
    NegInner = 1,
    /// -1/2 < p/q < 1/2
    Mid = 2,
    /// 1/2 < p/q < 3/2
    PosInner = 3,
    /// 3/2 < p/q
    PosOuter = 4,
}

impl From<RatioBand> for Fig8Band {
    fn from(b: RatioBand) -> Self {
        match b {
            RatioBand::NegOuter => Fig8Band::NegOuter,
            RatioBand::NegInner => Fig8Band::NegInner,
            RatioBand::Mid => Fig8Band::Mid,
            RatioBand::PosInner => Fig8Band::PosInner,
            RatioBand::PosOuter => Fig8Band::PosOuter,
        }
    }
}

/// Surface indices: 0 = K(0,1), 1 = K(4,1), 2 = K(4,-1).
pub const FIG8_SURFACE_K01: u32 = 0;
pub const FIG8_SURFACE_K41: u32 = 1;
pub const FIG8_SURFACE_K4M1: u32 = 2;

/// One closed candidate surface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Fig8Candidate {
    pub torus_x: i64,
    pub torus_y: i64,
    pub bands: u32,
    pub genus: u32,
    pub minimal: bool,
}

/// Opaque classification handle.
pub struct Fig8Classification {
    inner: Classification,
}

fn guard(f: impl FnOnce() -> Fig8Status) -> Fig8Status {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(Fig8Status::Panic)
}

fn surface_from_index(index: u32) -> Option<SpanningSurface> {
    SpanningSurface::ALL.get(index as usize).copied()
}

fn surface_index(s: SpanningSurface) -> u32 {
    SpanningSurface::ALL.iter().position(|&x| x == s).expect("listed") as u32
}

/// Classifies `M(two_p, q)` and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn fig8_classify(two_p: i64, q: i64, out: *mut *mut Fig8Classification) -> Fig8Status {
    if out.is_null() {
        return Fig8Status::NullPointer;
    }
    guard(|| match validate(two_p, q).and_then(classify) {
        Ok(inner) => {
            // SAFETY: checked non-null above; caller guarantees validity.
            unsafe { *out = Box::into_raw(Box::new(Fig8Classification { inner })) };
            Fig8Status::Ok
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            Fig8Status::from(&e)
        }
    })
}

/// Releases a handle from [`fig8_classify`]. Null is ignored.
///
/// # Safety
/// `handle` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_free(handle: *mut Fig8Classification) {
    if !handle.is_null() {
        // SAFETY: caller passes a pointer obtained from Box::into_raw.
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Normalised filling `(2p, q)` with `2p > 0`.
///
/// # Safety
/// `handle` must be a live handle; out pointers must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_filling(
    handle: *const Fig8Classification,
    two_p: *mut i64,
    q: *mut i64,
) -> Fig8Status {
    let (Some(h), false, false) = (unsafe { handle.as_ref() }, two_p.is_null(), q.is_null()) else {
        return Fig8Status::NullPointer;
    };
    unsafe {
        *two_p = h.inner.filling.two_p();
        *q = h.inner.filling.q();
    }
    Fig8Status::Ok
}

/// # Safety
/// `handle` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_band(handle: *const Fig8Classification, out: *mut Fig8Band) -> Fig8Status {
    let (Some(h), false) = (unsafe { handle.as_ref() }, out.is_null()) else {
        return Fig8Status::NullPointer;
    };
    unsafe { *out = h.inner.band.into() };
    Fig8Status::Ok
}

/// Index of the unique geometrically incompressible splitting surface.
///
/// # Safety
/// `handle` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_unique_surface(
    handle: *const Fig8Classification,
    out: *mut u32,
) -> Fig8Status {
    let (Some(h), false) = (unsafe { handle.as_ref() }, out.is_null()) else {
        return Fig8Status::NullPointer;
    };
    unsafe { *out = surface_index(h.inner.unique_surface) };
    Fig8Status::Ok
}

/// # Safety
/// `handle` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_candidate(
    handle: *const Fig8Classification,
    surface: u32,
    out: *mut Fig8Candidate,
) -> Fig8Status {
    let (Some(h), false) = (unsafe { handle.as_ref() }, out.is_null()) else {
        return Fig8Status::NullPointer;
    };
    let Some(s) = surface_from_index(surface) else {
        return Fig8Status::InvalidArgument;
    };
    let c = h.inner.candidate(s);
    unsafe {
        *out = Fig8Candidate {
            torus_x: c.torus_slope.x(),
            torus_y: c.torus_slope.y(),
            bands: c.bands,
            genus: c.genus,
            minimal: h.inner.minimal.contains(&s),
        }
    };
    Fig8Status::Ok
}

/// Whether `from` compresses to `to` in this filling.
///
/// # Safety
/// `handle` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_compresses(
    handle: *const Fig8Classification,
    from: u32,
    to: u32,
    out: *mut bool,
) -> Fig8Status {
    let (Some(h), false) = (unsafe { handle.as_ref() }, out.is_null()) else {
        return Fig8Status::NullPointer;
    };
    let (Some(from), Some(to)) = (surface_from_index(from), surface_from_index(to)) else {
        return Fig8Status::InvalidArgument;
    };
    unsafe { *out = h.inner.compressions.iter().any(|c| c.from == from && c.to == to) };
    Fig8Status::Ok
}

/// Full JSON report, as printed by `fig8 classify --json`. Free the string
/// with [`fig8_string_free`].
///
/// # Safety
/// `handle` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_classification_to_json(
    handle: *const Fig8Classification,
    out: *mut *mut c_char,
) -> Fig8Status {
    let (Some(h), false) = (unsafe { handle.as_ref() }, out.is_null()) else {
        return Fig8Status::NullPointer;
    };
    guard(|| match Report::build(h.inner.filling, CountMethod::Descent) {
        Ok(r) => {
            let s = CString::new(r.to_json()).expect("JSON has no interior NUL");
            unsafe { *out = s.into_raw() };
            Fig8Status::Ok
        }
        Err(e) => Fig8Status::from(&e),
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fig8_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the pointer came from CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Minimal-norm frame coefficients `(a, b)` with `q*b - 2p*a = 1`.
///
/// # Safety
/// `a` and `b` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_frame_for(two_p: i64, q: i64, a: *mut i64, b: *mut i64) -> Fig8Status {
    if a.is_null() || b.is_null() {
        return Fig8Status::NullPointer;
    }
    guard(|| match Frame::for_filling(two_p, q) {
        Ok(f) => {
            unsafe {
                *a = f.a();
                *b = f.b();
            }
            Fig8Status::Ok
        }
        Err(e) => Fig8Status::from(&e),
    })
}

/// Möbius bands of the incompressible surface in a solid torus bounded by
/// the even slope `x/y`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_moebius_count(x: i64, y: i64, out: *mut u32) -> Fig8Status {
    if out.is_null() {
        return Fig8Status::NullPointer;
    }
    guard(|| match EvenSlope::new(x, y) {
        Ok(e) => {
            unsafe { *out = moebius_count(e) };
            Fig8Status::Ok
        }
        Err(e) => Fig8Status::from(&e),
    })
}

/// Signed intersection of the canonical forms of two slopes.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fig8_intersection(x1: i64, y1: i64, x2: i64, y2: i64, out: *mut i64) -> Fig8Status {
    if out.is_null() {
        return Fig8Status::NullPointer;
    }
    let (s1, s2) = match (Slope::new(x1, y1), Slope::new(x2, y2)) {
        (Ok(s1), Ok(s2)) => (s1, s2),
        (Err(e), _) | (_, Err(e)) => return Fig8Status::from(&e),
    };
    match i64::try_from(s1.intersection(s2)) {
        Ok(v) => {
            unsafe { *out = v };
            Fig8Status::Ok
        }
        Err(_) => Fig8Status::Overflow,
    }
}

/// Static description of a status code; never null, never freed.
#[no_mangle]
pub extern "C" fn fig8_status_message(status: Fig8Status) -> *const c_char {
    let msg: &'static [u8] = match status {
        Fig8Status::Ok => b"ok\0",
        Fig8Status::InvalidSlope => b"not a slope\0",
        Fig8Status::ExceptionalFilling => b"excluded exceptional filling\0",
        Fig8Status::OddFilling => b"not an even filling; no one-sided splitting exists\0",
        Fig8Status::Inconsistent => b"internal consistency failure\0",
        Fig8Status::NullPointer => b"null pointer argument\0",
        Fig8Status::Overflow => b"integer overflow\0",
        Fig8Status::InvalidArgument => b"invalid argument\0",
        Fig8Status::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}
