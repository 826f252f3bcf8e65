//! C ABI over the core toolkit.
//!
//! Every function returns an [`HpStatus`]; results come back through out
//! pointers. Digraphs are opaque handles created by `hp_digraph_build`,
//! `hp_digraph_parse`, `hp_power` or `hp_generate_gk` and released with
//! `hp_digraph_free`. Strings returned by the library are released with
//! `hp_string_free`. The generated header lives in `include/hampow.h`.

use hampow_core::digraph::Digraph;
use hampow_core::euler::{is_eulerian, is_minimally_eulerian, Minimality};
use hampow_core::families::generate_gk;
use hampow_core::io::{format_edge_list, parse_edge_list};
use hampow_core::power::{ham_exponent, power, ExponentOutcome, SolverOptions};
use hampow_core::theorem::{f_bound, F_BOUND_MAX_N};
use std::ffi::{c_char, CStr, CString};

/// Outcome of a library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HpStatus {
    /// Success; out parameters are filled in.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments violate the function's domain (bad edge list, k out of
    /// range, and so on).
    InvalidInput = 2,
    /// The search budget ran out before the answer was certain.
    BudgetExhausted = 3,
    /// The quantity is undefined for this input.
    NotApplicable = 4,
}

/// Opaque digraph handle.
pub struct HpDigraph {
    inner: Digraph,
}

fn boxed(g: Digraph) -> *mut HpDigraph {
    Box::into_raw(Box::new(HpDigraph { inner: g }))
}

unsafe fn graph_ref<'a>(g: *const HpDigraph) -> Option<&'a Digraph> {
    unsafe { g.as_ref() }.map(|h| &h.inner)
}

/// Build a digraph on `n` vertices from `m` arcs given as a flattened
/// array `[u0, v0, u1, v1, ...]` of length `2 * m`.
///
/// # Safety
///
/// `edges` must point to `2 * m` readable `size_t` values (it may be null
/// when `m` is zero) and `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_digraph_build(
    n: usize,
    m: usize,
    edges: *const usize,
    out: *mut *mut HpDigraph,
) -> HpStatus {
    if out.is_null() || (edges.is_null() && m > 0) {
        return HpStatus::NullArgument;
    }
    let flat = if m == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(edges, 2 * m) }
    };
    let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    match Digraph::build(n, &pairs) {
        Ok(g) => {
            unsafe { *out = boxed(g) };
            HpStatus::Ok
        }
        Err(_) => HpStatus::InvalidInput,
    }
}

/// Parse the text edge-list format ("n m" header then one "u v" line per
/// arc, '#' comments allowed).
///
/// # Safety
///
/// `text` must be a valid NUL-terminated string and `out` a valid
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_digraph_parse(
    text: *const c_char,
    out: *mut *mut HpDigraph,
) -> HpStatus {
    if text.is_null() || out.is_null() {
        return HpStatus::NullArgument;
    }
    let Ok(s) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return HpStatus::InvalidInput;
    };
    match parse_edge_list(s) {
        Ok(g) => {
            unsafe { *out = boxed(g) };
            HpStatus::Ok
        }
        Err(_) => HpStatus::InvalidInput,
    }
}

/// Release a handle. Null is a no-op.
///
/// # Safety
///
/// `g` must be null or a pointer obtained from this library that has not
/// been freed before.
#[no_mangle]
pub unsafe extern "C" fn hp_digraph_free(g: *mut HpDigraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_digraph_n(g: *const HpDigraph, out: *mut usize) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            unsafe { *out = g.n() };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// Number of arcs.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_digraph_m(g: *const HpDigraph, out: *mut usize) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            unsafe { *out = g.m() };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// Half the total imbalance: the number of dipaths in a minimum
/// decomposition into dipaths and dicycles.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_p_sharp(g: *const HpDigraph, out: *mut u64) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            unsafe { *out = g.p_sharp() };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// True when the graph is balanced and connected in the Eulerian sense.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_is_eulerian(g: *const HpDigraph, out: *mut bool) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            unsafe { *out = is_eulerian(g) };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// True when every ordered pair of vertices is connected by a dipath.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_is_strongly_connected(g: *const HpDigraph, out: *mut bool) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            unsafe { *out = g.is_strongly_connected() };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// True when the graph has no dicycle.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_is_acyclic(g: *const HpDigraph, out: *mut bool) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            unsafe { *out = g.is_acyclic() };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// True when the graph is Eulerian and removing any single dicycle
/// disconnects it. Returns `BudgetExhausted` (with `out` set false) if
/// dicycle enumeration exceeds `cycle_cap` before the answer is known.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_is_minimally_eulerian(
    g: *const HpDigraph,
    cycle_cap: usize,
    out: *mut bool,
) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => match is_minimally_eulerian(g, cycle_cap) {
            Minimality::Minimal => {
                unsafe { *out = true };
                HpStatus::Ok
            }
            Minimality::NotEulerian | Minimality::Removable(_) => {
                unsafe { *out = false };
                HpStatus::Ok
            }
            Minimality::Indeterminate => {
                unsafe { *out = false };
                HpStatus::BudgetExhausted
            }
        },
        _ => HpStatus::NullArgument,
    }
}

/// The k-th power: an arc for every ordered pair at directed distance at
/// most `k`. `k` must be positive.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_power(
    g: *const HpDigraph,
    k: u32,
    out: *mut *mut HpDigraph,
) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            if k == 0 {
                return HpStatus::InvalidInput;
            }
            unsafe { *out = boxed(power(g, k)) };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// Least k such that the k-th power is Hamiltonian. Returns
/// `NotApplicable` when the exponent is undefined (n < 2 or not strongly
/// connected) and `BudgetExhausted` (with `out_h` set to the certified
/// lower bound) when the solver budget runs out.
///
/// # Safety
///
/// `g` must be a live handle and `out_h` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_ham_exponent(
    g: *const HpDigraph,
    budget: u64,
    out_h: *mut u32,
) -> HpStatus {
    match (unsafe { graph_ref(g) }, out_h.is_null()) {
        (Some(g), false) => {
            let opts = SolverOptions {
                budget,
                ..Default::default()
            };
            match ham_exponent(g, &opts) {
                ExponentOutcome::Exact { h, .. } => {
                    unsafe { *out_h = h };
                    HpStatus::Ok
                }
                ExponentOutcome::NotApplicable => HpStatus::NotApplicable,
                ExponentOutcome::BudgetExhausted { lo, .. } => {
                    unsafe { *out_h = lo };
                    HpStatus::BudgetExhausted
                }
            }
        }
        _ => HpStatus::NullArgument,
    }
}

/// Generate the extremal family member for parameter `k >= 4`.
///
/// # Safety
///
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_generate_gk(k: u64, out: *mut *mut HpDigraph) -> HpStatus {
    if out.is_null() {
        return HpStatus::NullArgument;
    }
    match generate_gk(k) {
        Ok(gk) => {
            unsafe { *out = boxed(gk.graph) };
            HpStatus::Ok
        }
        Err(_) => HpStatus::InvalidInput,
    }
}

/// ceil(sqrt(n) * log2(n)^2 / 2) for 2 <= n <= 2^26.
///
/// # Safety
///
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_f_bound(n: u64, out: *mut u64) -> HpStatus {
    if out.is_null() {
        return HpStatus::NullArgument;
    }
    if !(2..=F_BOUND_MAX_N).contains(&n) {
        return HpStatus::InvalidInput;
    }
    unsafe { *out = f_bound(n) };
    HpStatus::Ok
}

/// Render the graph in the text edge-list format. The returned string is
/// owned by the caller and must be released with `hp_string_free`.
///
/// # Safety
///
/// `g` must be a live handle and `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_format_edge_list(
    g: *const HpDigraph,
    out: *mut *mut c_char,
) -> HpStatus {
    match (unsafe { graph_ref(g) }, out.is_null()) {
        (Some(g), false) => {
            let text = format_edge_list(g);
            let Ok(c) = CString::new(text) else {
                return HpStatus::InvalidInput;
            };
            unsafe { *out = c.into_raw() };
            HpStatus::Ok
        }
        _ => HpStatus::NullArgument,
    }
}

/// Release a string returned by this library. Null is a no-op.
///
/// # Safety
///
/// `s` must be null or a string obtained from this library that has not
/// been freed before.
#[no_mangle]
pub unsafe extern "C" fn hp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
