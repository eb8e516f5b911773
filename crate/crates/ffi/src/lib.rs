//! C ABI over the csgin engine: opaque handles for rings and ideals, status
//! codes, and JSON result payloads matching the CLI reports. The generated
//! header lands in `target/include/csgin.h`.
//!
//! Ownership rules: every `*_new`/`*_parse` out-pointer is released with the
//! matching `*_free`; strings returned through `char**` are released with
//! [`csgin_string_free`]. The last error message is thread-local and valid
//! until the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use csgin::algebra::{parse_polynomial, parse_t_monomials, RingConfig, TermOrder};
use csgin::combinatorics::{predict_gin_generators, Graph, Hypergraph};
use csgin::error::Error;
use csgin::groebner::{EngineLimits, Ideal};
use csgin::hilbert::{k_polynomial_with, psi, psi_inverse, verify_numerator_identity, BoundedMonomialIdeal};
use csgin::models::{binomial_edge_ideal, hypergraph_minor_ideal, row_graded_minor_ideal};
use csgin::multigrading::{check_cs_with, multigraded_gin_with, CsStatus};
use csgin::report::{ideal_json, k_polynomial_json};

/// Call outcome; anything but `Ok` leaves a message in
/// [`csgin_last_error_message`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CsginStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotRadicalBorelFixed = 5,
    Timeout = 6,
    InternalError = 7,
}

/// Monomial order selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CsginOrder {
    Lex = 0,
    DegRevLex = 1,
}

/// Cartwright-Sturmfels verdict.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CsginVerdict {
    Certified = 0,
    NotCs = 1,
    Inconclusive = 2,
}

/// Opaque handle to a graded polynomial ring.
pub struct CsginRing {
    inner: RingConfig,
}

/// Opaque handle to an ideal with its Groebner cache.
pub struct CsginIdeal {
    inner: Ideal,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message).unwrap_or_else(|_| CString::new("invalid error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CsginStatus {
    match err {
        Error::Parse { .. } => CsginStatus::ParseError,
        Error::VariableOutOfBounds { .. } => CsginStatus::ParseError,
        Error::NotRadicalBorelFixed(_) => CsginStatus::NotRadicalBorelFixed,
        Error::Timeout => CsginStatus::Timeout,
        Error::Internal(_) => CsginStatus::InternalError,
        _ => CsginStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> CsginStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn guarded(body: impl FnOnce() -> CsginStatus) -> CsginStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".to_string());
            CsginStatus::InternalError
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, CsginStatus> {
    if ptr.is_null() {
        set_error("null string argument".into());
        return Err(CsginStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not valid UTF-8".into());
        CsginStatus::InvalidUtf8
    })
}

fn limits_from_ms(timeout_ms: u64) -> EngineLimits {
    if timeout_ms == 0 {
        EngineLimits::none()
    } else {
        EngineLimits::with_deadline(Instant::now() + Duration::from_millis(timeout_ms))
    }
}

fn order_of(order: CsginOrder) -> TermOrder {
    match order {
        CsginOrder::Lex => TermOrder::lex(),
        CsginOrder::DegRevLex => TermOrder::degrevlex(),
    }
}

fn out_string(json: String, out: *mut *mut c_char) -> CsginStatus {
    match CString::new(json) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CsginStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL".into());
            CsginStatus::InternalError
        }
    }
}

/// Message for the most recent failure on this thread, or NULL.
#[no_mangle]
pub extern "C" fn csgin_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must have been returned by a csgin function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn csgin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the ring of an m x n generic matrix graded by columns.
///
/// # Safety
/// Pointer arguments must be valid for the documented length and lifetime;
/// this applies to every function below that takes raw pointers.
#[no_mangle]
pub unsafe extern "C" fn csgin_ring_new_uniform(
    cols: usize,
    rows: usize,
    prime: u64,
    out: *mut *mut CsginRing,
) -> CsginStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out-pointer".into());
            return CsginStatus::NullArgument;
        }
        match RingConfig::uniform(cols, rows, prime) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CsginRing { inner })) };
                CsginStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Creates a ring with explicit per-column block sizes.
///
/// # Safety
/// `blocks` must point to `block_count` readable u32 values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_ring_new_blocks(
    blocks: *const u32,
    block_count: usize,
    prime: u64,
    out: *mut *mut CsginRing,
) -> CsginStatus {
    guarded(|| {
        if out.is_null() || blocks.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let blocks: Vec<usize> = unsafe { std::slice::from_raw_parts(blocks, block_count) }
            .iter()
            .map(|&b| b as usize)
            .collect();
        match RingConfig::new(blocks, prime) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CsginRing { inner })) };
                CsginStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `ring` must come from a `csgin_ring_new_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn csgin_ring_free(ring: *mut CsginRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of matrix variables in the ring.
///
/// # Safety
/// `ring` must be a live ring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_ring_variable_count(
    ring: *const CsginRing,
    out: *mut usize,
) -> CsginStatus {
    guarded(|| {
        if ring.is_null() || out.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        unsafe { *out = (*ring).inner.var_count() };
        CsginStatus::Ok
    })
}

/// Parses newline-separated generator expressions in the given ring.
///
/// # Safety
/// `ring` must be a live ring handle; `generators` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_ideal_parse(
    ring: *const CsginRing,
    generators: *const c_char,
    out: *mut *mut CsginIdeal,
) -> CsginStatus {
    guarded(|| {
        if ring.is_null() || out.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let text = match unsafe { read_str(generators) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let ring = unsafe { &(*ring).inner };
        let mut gens = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match parse_polynomial(line, ring) {
                Ok(p) => gens.push(p),
                Err(e) => return fail(e),
            }
        }
        let ideal = Ideal::new(ring.clone(), gens);
        unsafe { *out = Box::into_raw(Box::new(CsginIdeal { inner: ideal })) };
        CsginStatus::Ok
    })
}

/// Builds the generalized binomial edge ideal of a graph given as a flat
/// array of vertex pairs (1-based).
///
/// # Safety
/// `edge_pairs` must hold `2 * edge_count` readable u32 values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_ideal_binomial_edge(
    vertices: u32,
    edge_pairs: *const u32,
    edge_count: usize,
    rows: u32,
    prime: u64,
    out: *mut *mut CsginIdeal,
) -> CsginStatus {
    guarded(|| {
        if out.is_null() || (edge_count > 0 && edge_pairs.is_null()) {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let flat = unsafe { std::slice::from_raw_parts(edge_pairs, edge_count * 2) };
        let edges: Vec<(usize, usize)> = flat
            .chunks(2)
            .map(|c| (c[0] as usize, c[1] as usize))
            .collect();
        let graph = match Graph::new(vertices as usize, edges) {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        match binomial_edge_ideal(&graph, rows as usize, prime) {
            Ok(ideal) => {
                unsafe { *out = Box::into_raw(Box::new(CsginIdeal { inner: ideal })) };
                CsginStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds the hypergraph minor ideal from flat edge data: `edge_count`
/// consecutive groups of `uniformity` vertices. Set `row_grading` to grade by
/// matrix rows instead of columns.
///
/// # Safety
/// `edge_vertices` must hold `uniformity * edge_count` readable u32 values; `out` must be writable.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn csgin_ideal_hypergraph(
    vertices: u32,
    uniformity: u32,
    edge_vertices: *const u32,
    edge_count: usize,
    rows: u32,
    prime: u64,
    row_grading: bool,
    out: *mut *mut CsginIdeal,
) -> CsginStatus {
    guarded(|| {
        if out.is_null() || (edge_count > 0 && edge_vertices.is_null()) {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let s = uniformity as usize;
        let flat = unsafe { std::slice::from_raw_parts(edge_vertices, edge_count * s) };
        let edges: Vec<Vec<usize>> = flat
            .chunks(s)
            .map(|c| c.iter().map(|&v| v as usize).collect())
            .collect();
        let h = match Hypergraph::new(vertices as usize, s, edges) {
            Ok(h) => h,
            Err(e) => return fail(e),
        };
        let built = if row_grading {
            row_graded_minor_ideal(&h, rows as usize, prime)
        } else {
            hypergraph_minor_ideal(&h, rows as usize, prime)
        };
        match built {
            Ok(ideal) => {
                unsafe { *out = Box::into_raw(Box::new(CsginIdeal { inner: ideal })) };
                CsginStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `ideal` must come from a `csgin_ideal_*` constructor and not be freed
/// twice.
#[no_mangle]
pub unsafe extern "C" fn csgin_ideal_free(ideal: *mut CsginIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of stored generators.
///
/// # Safety
/// `ideal` must be a live ideal handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_ideal_generator_count(
    ideal: *const CsginIdeal,
    out: *mut usize,
) -> CsginStatus {
    guarded(|| {
        if ideal.is_null() || out.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        unsafe { *out = (*ideal).inner.gens().len() };
        CsginStatus::Ok
    })
}

/// Cartwright-Sturmfels verdict by sampling generic coordinate changes.
/// `timeout_ms = 0` means no limit.
///
/// # Safety
/// `ideal` must be a live ideal handle; `out_verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_check_cs(
    ideal: *const CsginIdeal,
    order: CsginOrder,
    samples: u32,
    seed: u64,
    timeout_ms: u64,
    out_verdict: *mut CsginVerdict,
) -> CsginStatus {
    guarded(|| {
        if ideal.is_null() || out_verdict.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let ideal = unsafe { &(*ideal).inner };
        match check_cs_with(
            ideal,
            &order_of(order),
            samples as usize,
            seed,
            &limits_from_ms(timeout_ms),
        ) {
            Ok(verdict) => {
                let v = match verdict.status {
                    CsStatus::Certified => CsginVerdict::Certified,
                    CsStatus::NotCs => CsginVerdict::NotCs,
                    CsStatus::Inconclusive => CsginVerdict::Inconclusive,
                };
                unsafe { *out_verdict = v };
                CsginStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Like [`csgin_check_cs`], returning the full JSON result payload.
///
/// # Safety
/// `ideal` must be a live ideal handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_check_cs_json(
    ideal: *const CsginIdeal,
    order: CsginOrder,
    samples: u32,
    seed: u64,
    timeout_ms: u64,
    out_json: *mut *mut c_char,
) -> CsginStatus {
    guarded(|| {
        if ideal.is_null() || out_json.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let ideal = unsafe { &(*ideal).inner };
        match check_cs_with(
            ideal,
            &order_of(order),
            samples as usize,
            seed,
            &limits_from_ms(timeout_ms),
        ) {
            Ok(verdict) => {
                let payload = serde_json::json!({
                    "status": verdict.status.name(),
                    "stable": verdict.report.stable,
                    "prime": verdict.report.prime,
                    "witness": verdict.witness.as_ref().map(ideal_json),
                    "witness_sample": verdict.witness_sample,
                    "reason": verdict.reason.map(|r| r.name()),
                });
                out_string(payload.to_string(), out_json)
            }
            Err(e) => fail(e),
        }
    })
}

/// Sampled generic initial ideal as a JSON payload.
///
/// # Safety
/// `ideal` must be a live ideal handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_gin_json(
    ideal: *const CsginIdeal,
    order: CsginOrder,
    samples: u32,
    seed: u64,
    timeout_ms: u64,
    out_json: *mut *mut c_char,
) -> CsginStatus {
    guarded(|| {
        if ideal.is_null() || out_json.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let ideal = unsafe { &(*ideal).inner };
        match multigraded_gin_with(
            ideal,
            &order_of(order),
            samples as usize,
            seed,
            &limits_from_ms(timeout_ms),
        ) {
            Ok(report) => {
                let payload = serde_json::json!({
                    "stable": report.stable,
                    "samples": report.samples.len(),
                    "generators": report.gin.as_ref().map(ideal_json),
                    "prime": report.prime,
                });
                out_string(payload.to_string(), out_json)
            }
            Err(e) => fail(e),
        }
    })
}

/// K-polynomial of S/I as a JSON list of exponent/coefficient terms.
///
/// # Safety
/// `ideal` must be a live ideal handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_kpoly_json(
    ideal: *const CsginIdeal,
    order: CsginOrder,
    timeout_ms: u64,
    out_json: *mut *mut c_char,
) -> CsginStatus {
    guarded(|| {
        if ideal.is_null() || out_json.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let ideal = unsafe { &(*ideal).inner };
        match k_polynomial_with(ideal, &order_of(order), &limits_from_ms(timeout_ms)) {
            Ok(k) => {
                let payload = serde_json::json!({
                    "k_polynomial": k_polynomial_json(&k),
                });
                out_string(payload.to_string(), out_json)
            }
            Err(e) => fail(e),
        }
    })
}

/// Closed-form gin prediction for a graph, optionally cross-checked against
/// the engine.
///
/// # Safety
/// `edge_pairs` must hold `2 * edge_count` readable u32 values; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_predict_json(
    vertices: u32,
    edge_pairs: *const u32,
    edge_count: usize,
    rows: u32,
    prime: u64,
    verify: bool,
    out_json: *mut *mut c_char,
) -> CsginStatus {
    guarded(|| {
        if out_json.is_null() || (edge_count > 0 && edge_pairs.is_null()) {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let flat = unsafe { std::slice::from_raw_parts(edge_pairs, edge_count * 2) };
        let edges: Vec<(usize, usize)> = flat
            .chunks(2)
            .map(|c| (c[0] as usize, c[1] as usize))
            .collect();
        let graph = match Graph::new(vertices as usize, edges) {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        let predicted = match predict_gin_generators(&graph, rows as usize, prime) {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let mut matches = serde_json::Value::Null;
        if verify {
            let ideal = match binomial_edge_ideal(&graph, rows as usize, prime) {
                Ok(i) => i,
                Err(e) => return fail(e),
            };
            let report = match multigraded_gin_with(
                &ideal,
                &TermOrder::degrevlex(),
                2,
                42,
                &EngineLimits::none(),
            ) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            matches = serde_json::json!(
                report.stable && report.gin.as_ref() == Some(&predicted)
            );
        }
        let payload = serde_json::json!({
            "generators": ideal_json(&predicted),
            "match": matches,
        });
        out_string(payload.to_string(), out_json)
    })
}

/// Forward bijection: polarize a bounded monomial ideal of T (text form,
/// e.g. "y1*y2^2, y3") and take the Alexander dual; reports the image and
/// the roundtrip/numerator checks.
///
/// # Safety
/// `t_ideal` must be a NUL-terminated string; `blocks` must hold `block_count` readable u32 values; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csgin_psi_json(
    t_ideal: *const c_char,
    blocks: *const u32,
    block_count: usize,
    prime: u64,
    out_json: *mut *mut c_char,
) -> CsginStatus {
    guarded(|| {
        if out_json.is_null() || blocks.is_null() {
            set_error("null argument".into());
            return CsginStatus::NullArgument;
        }
        let text = match unsafe { read_str(t_ideal) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let blocks: Vec<usize> = unsafe { std::slice::from_raw_parts(blocks, block_count) }
            .iter()
            .map(|&b| b as usize)
            .collect();
        let ring = match RingConfig::new(blocks.clone(), prime) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        let exps = match parse_t_monomials(text, ring.cols()) {
            Ok(e) => e,
            Err(e) => return fail(e),
        };
        let bounds: Vec<u32> = blocks.iter().map(|&b| b as u32).collect();
        let ideal = match BoundedMonomialIdeal::new(bounds, exps) {
            Ok(i) => i,
            Err(e) => return fail(e),
        };
        let image = match psi(&ideal, &ring) {
            Ok(j) => j,
            Err(e) => return fail(e),
        };
        let roundtrip = psi_inverse(&image).map(|b| b == ideal).unwrap_or(false);
        let payload = serde_json::json!({
            "preimage": ideal.render(),
            "image_generators": ideal_json(&image),
            "roundtrip_ok": roundtrip,
            "numerator_identity_ok": verify_numerator_identity(&ideal, &image),
        });
        out_string(payload.to_string(), out_json)
    })
}
