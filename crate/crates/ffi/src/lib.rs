//! C interface. Graphs live behind an opaque handle; every fallible call
//! returns an [`IdomlabStatus`] and leaves a message for
//! [`idomlab_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use idomlab::families::FamilySpec;
use idomlab::io::{graph6, verify_bundle, Verdict};
use idomlab::labelling::minimize_weight;
use idomlab::{direct_product, invariants, Graph, Invariant, SolveError, SolveOptions};

/// Opaque graph handle.
pub struct IdomlabGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdomlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    CapExceeded = 4,
    BudgetExhausted = 5,
    Undefined = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: IdomlabStatus, msg: impl Into<String>) -> IdomlabStatus {
    set_error(msg);
    status
}

fn solve_status(e: SolveError) -> IdomlabStatus {
    let status = match e {
        SolveError::CapExceeded { .. } => IdomlabStatus::CapExceeded,
        SolveError::BudgetExhausted => IdomlabStatus::BudgetExhausted,
        SolveError::Undefined(..) => IdomlabStatus::Undefined,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> IdomlabStatus) -> IdomlabStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(IdomlabStatus::Panic, "internal panic"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, IdomlabStatus> {
    if s.is_null() {
        return Err(fail(IdomlabStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(IdomlabStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn emit(out: *mut *mut IdomlabGraph, g: Graph) -> IdomlabStatus {
    *out = Box::into_raw(Box::new(IdomlabGraph(g)));
    IdomlabStatus::Ok
}

fn options(cap: usize) -> SolveOptions {
    if cap == 0 {
        SolveOptions::default()
    } else {
        SolveOptions::default().with_cap(cap)
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn idomlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `code` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_from_graph6(code: *const c_char, out: *mut *mut IdomlabGraph) -> IdomlabStatus {
    guard(|| {
        if out.is_null() {
            return fail(IdomlabStatus::NullPointer, "null output");
        }
        let code = tri!(text(code));
        match graph6::decode(code.trim()) {
            Ok(g) => emit(out, g),
            Err(e) => fail(IdomlabStatus::ParseError, e.to_string()),
        }
    })
}

/// `edges` holds `edge_count` pairs as `2 * edge_count` vertex indices.
///
/// # Safety
/// `edges` points to `2 * edge_count` values (or is null when
/// `edge_count` is 0) and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_from_edges(
    order: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut IdomlabGraph,
) -> IdomlabStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(IdomlabStatus::NullPointer, "null argument");
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::new(order, &pairs) {
            Ok(g) => emit(out, g),
            Err(e) => fail(IdomlabStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Builds a named family such as `cycle:16` or `X:3`.
///
/// # Safety
/// `spec` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_family(spec: *const c_char, out: *mut *mut IdomlabGraph) -> IdomlabStatus {
    guard(|| {
        if out.is_null() {
            return fail(IdomlabStatus::NullPointer, "null output");
        }
        let spec = tri!(text(spec));
        let built = spec.parse::<FamilySpec>().and_then(|s| s.build());
        match built {
            Ok(f) => emit(out, f.graph),
            Err(e) => fail(IdomlabStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Direct product, vertex `(g, h)` at index `g * order(h) + h`.
///
/// # Safety
/// `g` and `h` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_product(
    g: *const IdomlabGraph,
    h: *const IdomlabGraph,
    out: *mut *mut IdomlabGraph,
) -> IdomlabStatus {
    guard(|| {
        if g.is_null() || h.is_null() || out.is_null() {
            return fail(IdomlabStatus::NullPointer, "null argument");
        }
        match direct_product(&(*g).0, &(*h).0) {
            Ok(p) => emit(out, p.graph().clone()),
            Err(e) => fail(IdomlabStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `g` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_free(g: *mut IdomlabGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` is null or a live handle. Null gives 0.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_order(g: *const IdomlabGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` is null or a live handle. Null gives 0.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_edge_count(g: *const IdomlabGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Writes the graph6 string with its NUL into `buf`. `needed` receives
/// the required size including the NUL, also on `BUFFER_TOO_SMALL`.
///
/// # Safety
/// `g` is a live handle, `buf` has room for `len` bytes (or is null when
/// `len` is 0), and `needed` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_graph_to_graph6(
    g: *const IdomlabGraph,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> IdomlabStatus {
    guard(|| {
        let Some(g) = g.as_ref() else {
            return fail(IdomlabStatus::NullPointer, "null graph");
        };
        let code = graph6::encode(&g.0);
        if !needed.is_null() {
            *needed = code.len() + 1;
        }
        if buf.is_null() || len < code.len() + 1 {
            return fail(IdomlabStatus::BufferTooSmall, format!("need {} bytes", code.len() + 1));
        }
        ptr::copy_nonoverlapping(code.as_ptr(), buf as *mut u8, code.len());
        *buf.add(code.len()) = 0;
        IdomlabStatus::Ok
    })
}

/// Exact value of an invariant (`i`, `alpha`, `gamma`, `gamma_t`, `rho`).
/// A `cap` of 0 keeps the default vertex cap. When `witness` is non-null
/// the optimal set is written there in increasing order and
/// `witness_len` receives its size; the buffer must hold `order(g)`
/// entries.
///
/// # Safety
/// `g` is a live handle, `name` a NUL-terminated string, `value` writable,
/// and `witness`/`witness_len` null or writable as described.
#[no_mangle]
pub unsafe extern "C" fn idomlab_invariant(
    g: *const IdomlabGraph,
    name: *const c_char,
    cap: usize,
    value: *mut usize,
    witness: *mut usize,
    witness_len: *mut usize,
) -> IdomlabStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), value.is_null()) else {
            return fail(IdomlabStatus::NullPointer, "null argument");
        };
        let inv: Invariant = match tri!(text(name)).parse() {
            Ok(i) => i,
            Err(e) => return fail(IdomlabStatus::InvalidArgument, e),
        };
        let r = match invariants::compute(&g.0, inv, &options(cap)) {
            Ok(r) => r,
            Err(e) => return solve_status(e),
        };
        *value = r.value;
        if !witness.is_null() {
            for (k, v) in r.witness.iter().enumerate() {
                *witness.add(k) = v;
            }
            if !witness_len.is_null() {
                *witness_len = r.witness.len();
            }
        }
        IdomlabStatus::Ok
    })
}

/// Minimum weight of a legal labelling of `g` with clique order `n`,
/// equal to i(G×K_n).
///
/// # Safety
/// `g` is a live handle and `weight` is writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_min_labelling_weight(
    g: *const IdomlabGraph,
    n: usize,
    cap: usize,
    weight: *mut usize,
) -> IdomlabStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), weight.is_null()) else {
            return fail(IdomlabStatus::NullPointer, "null argument");
        };
        if n < 2 {
            return fail(IdomlabStatus::InvalidArgument, format!("clique order must be at least 2, got {n}"));
        }
        match minimize_weight(&g.0, n, &options(cap)) {
            Ok(l) => {
                *weight = l.weight();
                IdomlabStatus::Ok
            }
            Err(e) => solve_status(e),
        }
    })
}

/// Verifies a JSON certificate bundle and counts the verdicts.
///
/// # Safety
/// `json` is a NUL-terminated string; the three counters are writable.
#[no_mangle]
pub unsafe extern "C" fn idomlab_verify_certificates(
    json: *const c_char,
    cap: usize,
    verified: *mut usize,
    refuted: *mut usize,
    unchecked: *mut usize,
) -> IdomlabStatus {
    guard(|| {
        if verified.is_null() || refuted.is_null() || unchecked.is_null() {
            return fail(IdomlabStatus::NullPointer, "null counter");
        }
        let json = tri!(text(json));
        let cap = if cap == 0 { idomlab::VERIFY_CAP } else { cap };
        let outcomes = match verify_bundle(json, &SolveOptions::default().with_cap(cap)) {
            Ok(o) => o,
            Err(e) => return fail(IdomlabStatus::ParseError, e.to_string()),
        };
        let count = |v: Verdict| outcomes.iter().filter(|(_, o)| o.verdict == v).count();
        *verified = count(Verdict::Verified);
        *refuted = count(Verdict::Refuted);
        *unchecked = count(Verdict::Unchecked);
        IdomlabStatus::Ok
    })
}
