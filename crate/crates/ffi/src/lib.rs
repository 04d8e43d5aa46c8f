//! C interface to the non-resultant system topology library.
//!
//! Degree profiles travel as opaque handles; every computation returns a
//! status code and hands results back as NUL-terminated JSON strings in the
//! same schema the `nrt` CLI emits. Strings are allocated by this library
//! and must be released with [`nrt_string_free`]; a human-readable message
//! for the most recent failure on the current thread is available through
//! [`nrt_last_error`].

use std::cell::RefCell;
use std::ffi::CString;
use std::fmt::Display;

use libc::c_char;

use nonres::closed_form::{self, MDiscParams};
use nonres::oracle;
use nonres::output::{self, Field};
use nonres::spectral;
use nonres::DegreeProfile;

/// Outcome of an interface call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NrtStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments were rejected; see `nrt_last_error`.
    InvalidInput = 2,
    /// The requested space is empty (a lone complex form, or a lone real
    /// form of odd degree, always has a root).
    EmptyComplement = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(err: &dyn Display) {
    let msg = CString::new(err.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

/// Message describing the most recent failure on this thread, or null.
/// The caller owns the returned string.
#[no_mangle]
pub extern "C" fn nrt_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by a function of this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn nrt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opaque degree profile handle.
pub struct NrtProfile {
    inner: DegreeProfile,
}

/// Builds a profile from `len` degrees. On success writes a handle to
/// `out`; release it with [`nrt_profile_free`].
///
/// # Safety
/// `degrees` must point to `len` readable values and `out` must be a valid
/// destination pointer.
#[no_mangle]
pub unsafe extern "C" fn nrt_profile_new(
    degrees: *const i64,
    len: usize,
    out: *mut *mut NrtProfile,
) -> NrtStatus {
    if degrees.is_null() || out.is_null() {
        return NrtStatus::NullPointer;
    }
    let slice = std::slice::from_raw_parts(degrees, len);
    match DegreeProfile::new(slice.iter().copied()) {
        Ok(profile) => {
            *out = Box::into_raw(Box::new(NrtProfile { inner: profile }));
            NrtStatus::Ok
        }
        Err(e) => {
            set_error(&e);
            NrtStatus::InvalidInput
        }
    }
}

/// # Safety
/// `profile` must come from [`nrt_profile_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nrt_profile_free(profile: *mut NrtProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Dimension of the coefficient space `D = sum (d_i + 1)`.
///
/// # Safety
/// Both pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nrt_profile_total_dim(
    profile: *const NrtProfile,
    out: *mut u32,
) -> NrtStatus {
    if profile.is_null() || out.is_null() {
        return NrtStatus::NullPointer;
    }
    *out = (*profile).inner.total_dim();
    NrtStatus::Ok
}

unsafe fn write_json<T: serde::Serialize>(doc: &T, out: *mut *mut c_char) -> NrtStatus {
    let json = serde_json::to_string(doc).expect("serializable document");
    *out = CString::new(json).expect("JSON has no NUL").into_raw();
    NrtStatus::Ok
}

/// Reduced integer cohomology of the real complement, as JSON.
///
/// # Safety
/// `profile` must be a live handle and `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn nrt_real_json(
    profile: *const NrtProfile,
    out: *mut *mut c_char,
) -> NrtStatus {
    if profile.is_null() || out.is_null() {
        return NrtStatus::NullPointer;
    }
    let p = &(*profile).inner;
    write_json(&output::real_doc(p, &closed_form::real_cohomology(p)), out)
}

/// Reduced rational cohomology of the complex complement, as JSON.
/// Fails with `EmptyComplement` for a single form.
///
/// # Safety
/// `profile` must be a live handle and `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn nrt_complex_json(
    profile: *const NrtProfile,
    out: *mut *mut c_char,
) -> NrtStatus {
    if profile.is_null() || out.is_null() {
        return NrtStatus::NullPointer;
    }
    let p = &(*profile).inner;
    match closed_form::complex_cohomology(p) {
        Ok(reduced) => write_json(&output::complex_doc(p, &reduced), out),
        Err(e) => {
            set_error(&e);
            NrtStatus::EmptyComplement
        }
    }
}

/// Rational cohomology of the complement of the m-discriminant, as JSON.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn nrt_mdisc_json(d: i64, m: i64, out: *mut *mut c_char) -> NrtStatus {
    if out.is_null() {
        return NrtStatus::NullPointer;
    }
    match MDiscParams::new(d, m) {
        Ok(params) => write_json(
            &output::mdisc_doc(&params, &closed_form::m_discriminant_cohomology(&params)),
            out,
        ),
        Err(e) => {
            set_error(&e);
            NrtStatus::InvalidInput
        }
    }
}

/// A page of the resolution spectral sequence, as JSON. `complex_field`
/// selects the complex tabulation, `final_leaf` the surviving page.
///
/// # Safety
/// `profile` must be a live handle and `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn nrt_page_json(
    profile: *const NrtProfile,
    complex_field: bool,
    final_leaf: bool,
    out: *mut *mut c_char,
) -> NrtStatus {
    if profile.is_null() || out.is_null() {
        return NrtStatus::NullPointer;
    }
    let p = &(*profile).inner;
    if complex_field {
        let e1 = match spectral::build_complex_e1(p) {
            Ok(page) => page,
            Err(e) => {
                set_error(&e);
                return NrtStatus::EmptyComplement;
            }
        };
        let page = if final_leaf { e1.as_survivors() } else { e1 };
        write_json(&output::page_doc(p, &page, Field::Rational), out)
    } else {
        let e1 = spectral::build_real_e1(p);
        let page = if final_leaf {
            spectral::run_real_cascade(&e1, p)
                .expect("freshly built page")
                .final_page
        } else {
            e1
        };
        write_json(&output::page_doc(p, &page, Field::Integer), out)
    }
}

/// Runs the sampling census and returns the report as JSON; `verified`
/// receives the verdict. An empty complement yields the empty report with
/// `verified = true`.
///
/// # Safety
/// `profile`, `verified` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn nrt_verify_json(
    profile: *const NrtProfile,
    samples: u64,
    bound: u32,
    seed: u64,
    verified: *mut bool,
    out: *mut *mut c_char,
) -> NrtStatus {
    if profile.is_null() || verified.is_null() || out.is_null() {
        return NrtStatus::NullPointer;
    }
    let p = &(*profile).inner;
    match oracle::component_census(p, seed, bound, samples) {
        Ok(report) => {
            *verified = report.matches_prediction();
            write_json(&output::verify_doc(&report), out)
        }
        Err(nonres::Error::EmptyComplement) => {
            *verified = true;
            write_json(&output::verify_doc_empty(p, seed), out)
        }
        Err(e) => {
            set_error(&e);
            NrtStatus::InvalidInput
        }
    }
}

/// Constructs the witness system with winding index `index` for degrees
/// `(d1, d2)` and returns it as JSON, winding re-check included.
///
/// # Safety
/// `out` must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn nrt_witness_json(
    d1: u32,
    d2: u32,
    index: i64,
    out: *mut *mut c_char,
) -> NrtStatus {
    if out.is_null() {
        return NrtStatus::NullPointer;
    }
    match oracle::witness_system(d1, d2, index) {
        Ok(sys) => {
            let winding = oracle::winding_index(sys.form(0), sys.form(1))
                .expect("witness lies off the resultant variety");
            write_json(&output::witness_doc(d1, d2, index, &sys, winding), out)
        }
        Err(e) => {
            set_error(&e);
            NrtStatus::InvalidInput
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let s = std::ffi::CStr::from_ptr(ptr).to_str().unwrap().to_string();
        nrt_string_free(ptr);
        s
    }

    unsafe fn make_profile(degrees: &[i64]) -> *mut NrtProfile {
        let mut handle = std::ptr::null_mut();
        let status = nrt_profile_new(degrees.as_ptr(), degrees.len(), &mut handle);
        assert_eq!(status, NrtStatus::Ok);
        handle
    }

    #[test]
    fn real_round_trip_through_c_strings() {
        unsafe {
            let p = make_profile(&[7, 3]);
            let mut s = std::ptr::null_mut();
            assert_eq!(nrt_real_json(p, &mut s), NrtStatus::Ok);
            let json = take_string(s);
            let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(doc["components"], 4);
            assert_eq!(doc["profile"], serde_json::json!([7, 3]));

            let mut dim = 0u32;
            assert_eq!(nrt_profile_total_dim(p, &mut dim), NrtStatus::Ok);
            assert_eq!(dim, 12);
            nrt_profile_free(p);
        }
    }

    #[test]
    fn invalid_profile_reports_error() {
        unsafe {
            let degrees = [0i64, 3];
            let mut handle = std::ptr::null_mut();
            let status = nrt_profile_new(degrees.as_ptr(), degrees.len(), &mut handle);
            assert_eq!(status, NrtStatus::InvalidInput);
            let msg = take_string(nrt_last_error());
            assert!(msg.contains("not positive"), "{msg}");
            assert_eq!(
                nrt_profile_new(std::ptr::null(), 0, &mut handle),
                NrtStatus::NullPointer
            );
        }
    }

    #[test]
    fn complex_empty_and_mdisc() {
        unsafe {
            let p = make_profile(&[5]);
            let mut s = std::ptr::null_mut();
            assert_eq!(nrt_complex_json(p, &mut s), NrtStatus::EmptyComplement);
            nrt_profile_free(p);

            assert_eq!(nrt_mdisc_json(1, 2, &mut s), NrtStatus::InvalidInput);
            assert_eq!(nrt_mdisc_json(5, 2, &mut s), NrtStatus::Ok);
            let json = take_string(s);
            assert!(json.contains("\"field\":\"Q\""));
        }
    }

    #[test]
    fn page_and_verify_and_witness() {
        unsafe {
            let p = make_profile(&[6, 3]);
            let mut s = std::ptr::null_mut();
            assert_eq!(nrt_page_json(p, false, true, &mut s), NrtStatus::Ok);
            let json = take_string(s);
            let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(doc["entries"].as_array().unwrap().len(), 1);

            let mut verified = false;
            assert_eq!(
                nrt_verify_json(p, 100, 12, 42, &mut verified, &mut s),
                NrtStatus::Ok
            );
            assert!(verified);
            nrt_string_free(s);
            nrt_profile_free(p);

            assert_eq!(nrt_witness_json(5, 3, -1, &mut s), NrtStatus::Ok);
            let json = take_string(s);
            assert!(json.contains("\"winding\":-1"));

            assert_eq!(nrt_witness_json(3, 3, 5, &mut s), NrtStatus::InvalidInput);
        }
    }
}
