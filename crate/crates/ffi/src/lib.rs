//! C ABI for the exact Hurwitz-number library.
//!
//! The surface follows the usual opaque-handle pattern: create a
//! [`HurwitzContext`] with `hurwitz_context_new`, call query functions that
//! return newly-allocated decimal strings (`p/q` or `n`), free every
//! returned string with `hurwitz_string_free`, inspect
//! `hurwitz_last_error` after a NULL return, and destroy the context with
//! `hurwitz_context_free`. A context is not thread-safe; use one per
//! thread. The checked-in header `include/hurwitz.h` mirrors this file.

use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};

use num_bigint::BigInt;

use hurwitz_core::error::Error;
use hurwitz_core::hurwitz::{double_cutjoin, one_part, one_part_polynomial, spin_one_part};
use hurwitz_core::oracle::{self, double_hurwitz, HurwitzQuery};
use hurwitz_core::partitions::Partition;
use hurwitz_core::relations;

/// Status code: success.
pub const HURWITZ_OK: c_int = 0;
/// Status code: malformed argument.
pub const HURWITZ_ERR_ARGUMENT: c_int = 1;
/// Status code: enumeration budget refused the query.
pub const HURWITZ_ERR_BUDGET: c_int = 2;
/// Status code: internal panic was caught.
pub const HURWITZ_ERR_PANIC: c_int = 3;

/// Opaque handle owning the enumeration budget and the last error.
pub struct HurwitzContext {
    budget: BigInt,
    last_error: Option<CString>,
    last_status: c_int,
}

impl HurwitzContext {
    fn set_error(&mut self, status: c_int, message: String) {
        self.last_status = status;
        self.last_error = Some(CString::new(message).unwrap_or_else(|_| {
            CString::new("error message contained an interior NUL").expect("literal is NUL-free")
        }));
    }

    fn clear_error(&mut self) {
        self.last_status = HURWITZ_OK;
        self.last_error = None;
    }
}

/// Creates a context with the default enumeration budget.
#[no_mangle]
pub extern "C" fn hurwitz_context_new() -> *mut HurwitzContext {
    Box::into_raw(Box::new(HurwitzContext {
        budget: BigInt::from(oracle::DEFAULT_BUDGET),
        last_error: None,
        last_status: HURWITZ_OK,
    }))
}

/// Destroys a context created by `hurwitz_context_new`.
///
/// # Safety
/// `ctx` must be NULL or a pointer previously returned by
/// `hurwitz_context_new` that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_context_free(ctx: *mut HurwitzContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Overrides the enumeration budget (number of candidate tuples the
/// factorization oracle may consider).
///
/// # Safety
/// `ctx` must be a live context pointer.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_context_set_budget(ctx: *mut HurwitzContext, budget: u64) {
    if let Some(ctx) = ctx.as_mut() {
        ctx.budget = BigInt::from(budget);
    }
}

/// Status code of the most recent call through this context.
///
/// # Safety
/// `ctx` must be a live context pointer.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_last_status(ctx: *const HurwitzContext) -> c_int {
    ctx.as_ref().map(|c| c.last_status).unwrap_or(HURWITZ_ERR_ARGUMENT)
}

/// Last error message for this context, or NULL when the previous call
/// succeeded. The pointer is owned by the context and stays valid until the
/// next call through it.
///
/// # Safety
/// `ctx` must be a live context pointer.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_last_error(ctx: *const HurwitzContext) -> *const c_char {
    match ctx.as_ref().and_then(|c| c.last_error.as_ref()) {
        Some(msg) => msg.as_ptr(),
        None => std::ptr::null(),
    }
}

/// Frees a string returned by any query function.
///
/// # Safety
/// `s` must be NULL or a pointer returned by a query function of this
/// library that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn parts_from_raw(data: *const u32, len: usize) -> Result<Partition, Error> {
    if data.is_null() || len == 0 {
        return Err(Error::InvalidArgument("empty or NULL profile".into()));
    }
    let slice = std::slice::from_raw_parts(data, len);
    Partition::new(slice.to_vec())
}

fn status_of(error: &Error) -> c_int {
    match error {
        Error::BudgetExceeded { .. } => HURWITZ_ERR_BUDGET,
        _ => HURWITZ_ERR_ARGUMENT,
    }
}

unsafe fn run_query<F>(ctx: *mut HurwitzContext, f: F) -> *mut c_char
where
    F: FnOnce(&HurwitzContext) -> Result<String, Error>,
{
    let Some(ctx) = ctx.as_mut() else {
        return std::ptr::null_mut();
    };
    ctx.clear_error();
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| f(ctx))) {
        Ok(Ok(value)) => CString::new(value)
            .map(CString::into_raw)
            .unwrap_or(std::ptr::null_mut()),
        Ok(Err(e)) => {
            ctx.set_error(status_of(&e), e.to_string());
            std::ptr::null_mut()
        }
        Err(_) => {
            ctx.set_error(HURWITZ_ERR_PANIC, "internal panic".into());
            std::ptr::null_mut()
        }
    }
}

/// One-part double Hurwitz number for the profile `mu[0..mu_len]` over
/// infinity and the single part (|mu|) over zero. Returns the exact value
/// as a decimal string, or NULL on error.
///
/// # Safety
/// `ctx` must be a live context pointer and `mu` must point to `mu_len`
/// readable `uint32_t` entries.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_one_part(
    ctx: *mut HurwitzContext,
    genus: u32,
    mu: *const u32,
    mu_len: usize,
) -> *mut c_char {
    let parsed = parts_from_raw(mu, mu_len);
    run_query(ctx, move |_| Ok(one_part(genus, &parsed?).to_string()))
}

/// Connected double Hurwitz number through the cut-and-join class algebra.
///
/// # Safety
/// `ctx` must be a live context pointer; `mu` and `nu` must point to
/// `mu_len` and `nu_len` readable `uint32_t` entries.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_double(
    ctx: *mut HurwitzContext,
    genus: u32,
    mu: *const u32,
    mu_len: usize,
    nu: *const u32,
    nu_len: usize,
) -> *mut c_char {
    let mu = parts_from_raw(mu, mu_len);
    let nu = parts_from_raw(nu, nu_len);
    run_query(ctx, move |ctx| {
        Ok(double_cutjoin(genus, &mu?, &nu?, &ctx.budget)?.to_string())
    })
}

/// Double Hurwitz number by direct enumeration of transitive transposition
/// factorizations (the ground-truth route; may refuse for budget reasons).
///
/// # Safety
/// As for `hurwitz_double`.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_oracle(
    ctx: *mut HurwitzContext,
    genus: u32,
    mu: *const u32,
    mu_len: usize,
    nu: *const u32,
    nu_len: usize,
) -> *mut c_char {
    let mu = parts_from_raw(mu, mu_len);
    let nu = parts_from_raw(nu, nu_len);
    run_query(ctx, move |ctx| {
        let query = HurwitzQuery::new(genus, mu?, nu?)?;
        Ok(double_hurwitz(&query, &ctx.budget)?.to_string())
    })
}

/// One-part spin Hurwitz number of spin order `r` (zero when the
/// branch-point count is not integral).
///
/// # Safety
/// As for `hurwitz_one_part`.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_spin_one_part(
    ctx: *mut HurwitzContext,
    genus: u32,
    mu: *const u32,
    mu_len: usize,
    r: u32,
) -> *mut c_char {
    let parsed = parts_from_raw(mu, mu_len);
    run_query(ctx, move |_| {
        if r == 0 {
            return Err(Error::InvalidArgument("spin order must be positive".into()));
        }
        Ok(spin_one_part(genus, &parsed?, r).to_string())
    })
}

/// The symbolic one-part polynomial as JSON: monomial-symmetric exponent
/// keys with exact rational coefficients.
///
/// # Safety
/// `ctx` must be a live context pointer.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_polynomial_json(
    ctx: *mut HurwitzContext,
    genus: u32,
    n: usize,
) -> *mut c_char {
    run_query(ctx, move |_| {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one part".into()));
        }
        let poly = one_part_polynomial(genus, n);
        let terms: Vec<serde_json::Value> = poly
            .terms()
            .iter()
            .map(|(key, coeff)| {
                serde_json::json!({
                    "mu_exponents": key,
                    "coefficient": coeff.to_string(),
                })
            })
            .collect();
        Ok(serde_json::json!({
            "genus": genus,
            "n": n,
            "d_exponent": 2 * genus as i64 - 2 + n as i64,
            "terms": terms,
        })
        .to_string())
    })
}

/// Runs a verification suite ("comparison", "exchange", "appendix",
/// "chiodo", "spin" or "section6") on its default grid and returns the JSON
/// report; inspect its "failed" field for the outcome.
///
/// # Safety
/// `ctx` must be a live context pointer and `suite` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_verify_json(
    ctx: *mut HurwitzContext,
    suite: *const c_char,
) -> *mut c_char {
    if suite.is_null() {
        return std::ptr::null_mut();
    }
    let name = CStr::from_ptr(suite).to_string_lossy().into_owned();
    run_query(ctx, move |ctx| {
        let report = match name.as_str() {
            "comparison" => relations::verify_thm_comparison(5, 8),
            "exchange" => relations::verify_exchange(2, 5, &ctx.budget),
            "appendix" => relations::verify_appendix(5),
            "chiodo" => relations::verify_prop_chiodo_series(4, 8),
            "spin" => relations::verify_spin(2, 4, 3, &ctx.budget),
            "section6" => relations::verify_section6(12),
            other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        };
        Ok(report.to_json())
    })
}

/// Library version as a static string (do not free).
#[no_mangle]
pub extern "C" fn hurwitz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let s = CStr::from_ptr(ptr).to_string_lossy().into_owned();
        hurwitz_string_free(ptr);
        s
    }

    #[test]
    fn one_part_through_the_c_abi() {
        unsafe {
            let ctx = hurwitz_context_new();
            let mu = [1u32, 1];
            let out = hurwitz_one_part(ctx, 1, mu.as_ptr(), mu.len());
            assert_eq!(take_string(out), "1/6");
            assert!(hurwitz_last_error(ctx).is_null());
            assert_eq!(hurwitz_last_status(ctx), HURWITZ_OK);
            hurwitz_context_free(ctx);
        }
    }

    #[test]
    fn errors_are_reported() {
        unsafe {
            let ctx = hurwitz_context_new();
            let mu = [2u32];
            let nu = [3u32];
            let out = hurwitz_double(ctx, 0, mu.as_ptr(), 1, nu.as_ptr(), 1);
            assert!(out.is_null());
            let err = hurwitz_last_error(ctx);
            assert!(!err.is_null());
            let msg = CStr::from_ptr(err).to_string_lossy();
            assert!(msg.contains("different sizes"), "{msg}");
            assert_eq!(hurwitz_last_status(ctx), HURWITZ_ERR_ARGUMENT);
            hurwitz_context_free(ctx);
        }
    }

    #[test]
    fn budget_respected() {
        unsafe {
            let ctx = hurwitz_context_new();
            hurwitz_context_set_budget(ctx, 10);
            let mu = [1u32, 1, 1];
            let nu = [3u32];
            let out = hurwitz_oracle(ctx, 1, mu.as_ptr(), 3, nu.as_ptr(), 1);
            assert!(out.is_null());
            assert_eq!(hurwitz_last_status(ctx), HURWITZ_ERR_BUDGET);
            // raising the budget makes the same query succeed
            hurwitz_context_set_budget(ctx, 1_000_000_000);
            let out = hurwitz_oracle(ctx, 1, mu.as_ptr(), 3, nu.as_ptr(), 1);
            assert_eq!(take_string(out), "9/4");
            hurwitz_context_free(ctx);
        }
    }

    #[test]
    fn spin_and_polynomial() {
        unsafe {
            let ctx = hurwitz_context_new();
            let mu = [2u32];
            let out = hurwitz_spin_one_part(ctx, 1, mu.as_ptr(), 1, 2);
            assert_eq!(take_string(out), "7/24");
            let poly = hurwitz_polynomial_json(ctx, 1, 2);
            let text = take_string(poly);
            assert!(text.contains("\"coefficient\":\"1/24\""), "{text}");
            hurwitz_context_free(ctx);
        }
    }

    #[test]
    fn verify_report_through_the_c_abi() {
        unsafe {
            let ctx = hurwitz_context_new();
            let name = CString::new("appendix").unwrap();
            let out = hurwitz_verify_json(ctx, name.as_ptr());
            let text = take_string(out);
            assert!(text.contains("\"failed\": 0"), "{text}");
            let bad = CString::new("nonsense").unwrap();
            let out = hurwitz_verify_json(ctx, bad.as_ptr());
            assert!(out.is_null());
            hurwitz_context_free(ctx);
        }
    }

    #[test]
    fn null_inputs_are_safe() {
        unsafe {
            let ctx = hurwitz_context_new();
            let out = hurwitz_one_part(ctx, 1, std::ptr::null(), 0);
            assert!(out.is_null());
            assert!(!hurwitz_last_error(ctx).is_null());
            hurwitz_string_free(std::ptr::null_mut());
            hurwitz_context_free(std::ptr::null_mut());
            hurwitz_context_free(ctx);
        }
    }

    #[test]
    fn version_is_static() {
        assert!(!hurwitz_version().is_null());
    }
}
