use std::ffi::CStr;
use std::ptr;

use fig8_splittings_ffi::*;

fn classify(two_p: i64, q: i64) -> *mut Fig8Classification {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { fig8_classify(two_p, q, &mut h) }, Fig8Status::Ok);
    assert!(!h.is_null());
    h
}

fn candidate(h: *const Fig8Classification, s: u32) -> Fig8Candidate {
    let mut c = Fig8Candidate::default();
    assert_eq!(unsafe { fig8_classification_candidate(h, s, &mut c) }, Fig8Status::Ok);
    c
}

#[test]
fn worked_example_through_handle() {
    let h = classify(8, 3);
    let c01 = candidate(h, FIG8_SURFACE_K01);
    let c41 = candidate(h, FIG8_SURFACE_K41);
    let c4m1 = candidate(h, FIG8_SURFACE_K4M1);
    assert_eq!((c01.torus_x, c01.torus_y, c01.genus), (8, -3, 4));
    assert_eq!((c41.torus_x, c41.torus_y, c41.bands, c41.genus), (4, -1, 2, 4));
    assert_eq!((c4m1.torus_x, c4m1.torus_y, c4m1.genus), (20, -7, 6));
    assert!(c01.minimal && c41.minimal && !c4m1.minimal);

    let mut band = Fig8Band::Mid;
    assert_eq!(unsafe { fig8_classification_band(h, &mut band) }, Fig8Status::Ok);
    assert_eq!(band, Fig8Band::PosInner);

    let mut unique = u32::MAX;
    assert_eq!(unsafe { fig8_classification_unique_surface(h, &mut unique) }, Fig8Status::Ok);
    assert_eq!(unique, FIG8_SURFACE_K01);

    let mut yes = false;
    let st = unsafe { fig8_classification_compresses(h, FIG8_SURFACE_K4M1, FIG8_SURFACE_K01, &mut yes) };
    assert_eq!(st, Fig8Status::Ok);
    assert!(yes);
    let st = unsafe { fig8_classification_compresses(h, FIG8_SURFACE_K01, FIG8_SURFACE_K41, &mut yes) };
    assert_eq!(st, Fig8Status::Ok);
    assert!(!yes);

    unsafe { fig8_classification_free(h) };
}

#[test]
fn normalised_filling() {
    let h = classify(-8, -3);
    let (mut two_p, mut q) = (0, 0);
    assert_eq!(unsafe { fig8_classification_filling(h, &mut two_p, &mut q) }, Fig8Status::Ok);
    assert_eq!((two_p, q), (8, 3));
    unsafe { fig8_classification_free(h) };
}

#[test]
fn json_matches_core_report() {
    let h = classify(10, -3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fig8_classification_to_json(h, &mut s) }, Fig8Status::Ok);
    let json = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe {
        fig8_string_free(s);
        fig8_classification_free(h);
    }
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["verdict"]["unique_surface"], "P4m1");
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    for ((two_p, q), want) in [
        ((4, 1), Fig8Status::ExceptionalFilling),
        ((3, 2), Fig8Status::OddFilling),
        ((6, 2), Fig8Status::InvalidSlope),
        ((0, 0), Fig8Status::InvalidSlope),
    ] {
        assert_eq!(unsafe { fig8_classify(two_p, q, &mut h) }, want, "({two_p}, {q})");
        assert!(h.is_null());
    }
    assert_eq!(unsafe { fig8_classify(8, 3, ptr::null_mut()) }, Fig8Status::NullPointer);

    let h = classify(8, 3);
    let mut c = Fig8Candidate::default();
    assert_eq!(unsafe { fig8_classification_candidate(h, 3, &mut c) }, Fig8Status::InvalidArgument);
    assert_eq!(unsafe { fig8_classification_candidate(h, 0, ptr::null_mut()) }, Fig8Status::NullPointer);
    assert_eq!(
        unsafe { fig8_classification_candidate(ptr::null(), 0, &mut c) },
        Fig8Status::NullPointer
    );
    unsafe { fig8_classification_free(h) };
    unsafe { fig8_classification_free(ptr::null_mut()) };
    unsafe { fig8_string_free(ptr::null_mut()) };
}

#[test]
fn free_functions() {
    let (mut a, mut b) = (0, 0);
    assert_eq!(unsafe { fig8_frame_for(8, 3, &mut a, &mut b) }, Fig8Status::Ok);
    assert_eq!((a, b), (1, 3));
    assert_eq!(unsafe { fig8_frame_for(0, 0, &mut a, &mut b) }, Fig8Status::InvalidSlope);

    let mut n = 0;
    assert_eq!(unsafe { fig8_moebius_count(4, 1, &mut n) }, Fig8Status::Ok);
    assert_eq!(n, 2);
    assert_eq!(unsafe { fig8_moebius_count(22, 7, &mut n) }, Fig8Status::Ok);
    assert_eq!(n, 5);
    assert_eq!(unsafe { fig8_moebius_count(3, 1, &mut n) }, Fig8Status::InvalidSlope);

    let mut i = 0;
    assert_eq!(unsafe { fig8_intersection(4, 1, 0, 1, &mut i) }, Fig8Status::Ok);
    assert_eq!(i, 4);
    assert_eq!(
        unsafe { fig8_intersection(i64::MAX, 1, 1, i64::MAX, &mut i) },
        Fig8Status::Overflow
    );
}

#[test]
fn status_messages_are_static() {
    for st in [Fig8Status::Ok, Fig8Status::OddFilling, Fig8Status::Panic] {
        let msg = unsafe { CStr::from_ptr(fig8_status_message(st)) };
        assert!(!msg.to_bytes().is_empty());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fig8_splittings.h")).unwrap();
    assert!(header.contains("#ifndef FIG8_SPLITTINGS_H"));
    assert!(header.contains("typedef struct Fig8Classification Fig8Classification;"));
    for f in [
        "fig8_classify(",
        "fig8_classification_free(",
        "fig8_classification_candidate(",
        "fig8_classification_to_json(",
        "fig8_string_free(",
        "fig8_frame_for(",
        "fig8_moebius_count(",
        "fig8_intersection(",
        "fig8_status_message(",
    ] {
        assert!(header.contains(f), "{f}");
    }
    assert!(header.contains("FIG8_STATUS_EXCEPTIONAL_FILLING = 3"));
}
