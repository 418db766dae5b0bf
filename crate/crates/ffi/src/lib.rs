//! C ABI over the `radmax` library.
//!
//! Graphs cross the boundary as opaque `RadmaxGraph` handles owned by the
//! caller and released with `radmax_graph_free`. Strings returned through
//! `char **` out-parameters are released with `radmax_string_free`. Every
//! fallible call returns a `RadmaxStatus`; on failure a message is
//! available from `radmax_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use radmax::formats;
use radmax::search::{self, ShardSpec};
use radmax::{
    ConstructionError, ConstructionParams, FormatError, Graph, GraphError, MaximalityError, SearchError,
};

/// Eccentricity value reported for disconnected graphs.
pub const RADMAX_INFINITE: u32 = u32::MAX;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadmaxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    VertexOutOfRange = 4,
    InvalidEdge = 5,
    Disconnected = 6,
    Infeasible = 7,
    UnsupportedOrder = 8,
    OrderOutOfRange = 9,
    NotRadiallyMaximal = 10,
    SearchError = 11,
    Internal = 12,
}

/// Opaque graph handle.
pub struct RadmaxGraph {
    graph: Graph,
    labels: Option<Vec<String>>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

trait Status {
    fn status(&self) -> RadmaxStatus;
}

impl Status for GraphError {
    fn status(&self) -> RadmaxStatus {
        match self {
            GraphError::OrderOutOfRange { .. } => RadmaxStatus::OrderOutOfRange,
            GraphError::VertexOutOfRange { .. } | GraphError::InvalidPermutation { .. } => {
                RadmaxStatus::VertexOutOfRange
            }
            GraphError::SelfLoop { .. } | GraphError::DuplicateEdge { .. } => RadmaxStatus::InvalidEdge,
            GraphError::Disconnected => RadmaxStatus::Disconnected,
        }
    }
}

impl Status for FormatError {
    fn status(&self) -> RadmaxStatus {
        match self {
            FormatError::Graph(g) => g.status(),
            _ => RadmaxStatus::ParseError,
        }
    }
}

impl Status for ConstructionError {
    fn status(&self) -> RadmaxStatus {
        match self {
            ConstructionError::Infeasible { .. } => RadmaxStatus::Infeasible,
            ConstructionError::UnsupportedOrder { .. } => RadmaxStatus::UnsupportedOrder,
            ConstructionError::Graph(g) => g.status(),
        }
    }
}

impl Status for MaximalityError {
    fn status(&self) -> RadmaxStatus {
        match self {
            MaximalityError::Disconnected => RadmaxStatus::Disconnected,
            MaximalityError::Graph(g) => g.status(),
            _ => RadmaxStatus::NotRadiallyMaximal,
        }
    }
}

impl Status for SearchError {
    fn status(&self) -> RadmaxStatus {
        RadmaxStatus::SearchError
    }
}

fn fail<E: Status + std::fmt::Display>(e: E) -> RadmaxStatus {
    set_error(e.to_string());
    e.status()
}

/// Runs `body`, mapping panics to `Internal`.
fn guard(body: impl FnOnce() -> RadmaxStatus) -> RadmaxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            RadmaxStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const RadmaxGraph) -> Result<&'a RadmaxGraph, RadmaxStatus> {
    if g.is_null() {
        set_error("null graph handle");
        return Err(RadmaxStatus::NullPointer);
    }
    Ok(&*g)
}

unsafe fn input_str<'a>(s: *const c_char) -> Result<&'a str, RadmaxStatus> {
    if s.is_null() {
        set_error("null string");
        return Err(RadmaxStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        RadmaxStatus::InvalidUtf8
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> RadmaxStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RadmaxStatus::NullPointer;
    }
    out.write(value);
    RadmaxStatus::Ok
}

unsafe fn write_graph(out: *mut *mut RadmaxGraph, graph: Graph, labels: Option<Vec<String>>) -> RadmaxStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RadmaxStatus::NullPointer;
    }
    out.write(Box::into_raw(Box::new(RadmaxGraph { graph, labels })));
    RadmaxStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> RadmaxStatus {
    let c = CString::new(s).expect("generated text has no nul");
    write_out(out, c.into_raw())
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn radmax_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn radmax_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses graph6, DOT or an edge list (auto-detected).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_parse(text: *const c_char, out: *mut *mut RadmaxGraph) -> RadmaxStatus {
    guard(|| {
        let text = tri!(input_str(text));
        match formats::decode(text) {
            Ok(g) => write_graph(out, g, None),
            Err(e) => fail(e),
        }
    })
}

/// Builds a radially maximal graph of radius `r`, diameter `d`, order `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_construct(r: u32, d: u32, n: usize, out: *mut *mut RadmaxGraph) -> RadmaxStatus {
    guard(|| match radmax::build_radially_maximal(ConstructionParams::new(r, d, n)) {
        Ok(c) => write_graph(out, c.graph, Some(c.labels)),
        Err(e) => fail(e),
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_free(g: *mut RadmaxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `s` must come from this library. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn radmax_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Order of `g`, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_order(g: *const RadmaxGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.order())
}

/// Edge count of `g`, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_size(g: *const RadmaxGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.size())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_has_edge(
    g: *const RadmaxGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        let n = g.graph.order();
        if u >= n || v >= n {
            return fail(GraphError::VertexOutOfRange { vertex: u.max(v), order: n });
        }
        write_out(out, g.graph.has_edge(u, v))
    })
}

/// New handle holding `g + uv`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_add_edge(
    g: *const RadmaxGraph,
    u: usize,
    v: usize,
    out: *mut *mut RadmaxGraph,
) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        match g.graph.add_edge(u, v) {
            Ok(h) => write_graph(out, h, None),
            Err(e) => fail(e),
        }
    })
}

/// New handle holding the extension of `g` at `v` (a new vertex joined to
/// `v` and all of its neighbours).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_extend(
    g: *const RadmaxGraph,
    v: usize,
    out: *mut *mut RadmaxGraph,
) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        match radmax::extend(&g.graph, v) {
            Ok(h) => write_graph(out, h, None),
            Err(e) => fail(e),
        }
    })
}

/// graph6 text (no trailing newline).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_to_graph6(g: *const RadmaxGraph, out: *mut *mut c_char) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        write_string(out, formats::to_graph6(&g.graph))
    })
}

/// DOT text, with construction labels when the handle came from
/// `radmax_construct`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_to_dot(g: *const RadmaxGraph, out: *mut *mut c_char) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        write_string(out, formats::to_dot(&g.graph, g.labels.as_deref()))
    })
}

/// Construction label of vertex `v` (e.g. `x3`, `y1`, `x4'2`).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_graph_label(g: *const RadmaxGraph, v: usize, out: *mut *mut c_char) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        match g.labels.as_ref().and_then(|l| l.get(v)) {
            Some(label) => write_string(out, label.clone()),
            None => fail(GraphError::VertexOutOfRange { vertex: v, order: g.labels.as_ref().map_or(0, Vec::len) }),
        }
    })
}

/// Eccentricity of `v`; `RADMAX_INFINITE` when `g` is disconnected.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_eccentricity(g: *const RadmaxGraph, v: usize, out: *mut u32) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        match g.graph.eccentricity(v) {
            Ok(e) => write_out(out, e),
            Err(e) => fail(e),
        }
    })
}

/// Radius and diameter; `RADMAX_INFINITE` for both when disconnected.
///
/// # Safety
/// `g` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_radius_diameter(
    g: *const RadmaxGraph,
    radius: *mut u32,
    diameter: *mut u32,
) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        if radius.is_null() || diameter.is_null() {
            set_error("null output pointer");
            return RadmaxStatus::NullPointer;
        }
        let p = g.graph.eccentricity_profile();
        radius.write(p.radius);
        diameter.write(p.diameter);
        RadmaxStatus::Ok
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_is_radially_maximal(g: *const RadmaxGraph, out: *mut bool) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        match radmax::is_radially_maximal(&g.graph) {
            Ok(b) => write_out(out, b),
            Err(e) => fail(e),
        }
    })
}

/// Maximality certificate as JSON; `NotRadiallyMaximal` if none exists.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_certificate_json(g: *const RadmaxGraph, out: *mut *mut c_char) -> RadmaxStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        match radmax::certificate(&g.graph) {
            Ok(c) => write_string(out, serde_json::to_string(&c).expect("serializable")),
            Err(e) => fail(e),
        }
    })
}

/// Exhaustive search report as JSON. `radius == 0` checks the diameter
/// bound at `order`; otherwise counts non-self-centered radially maximal
/// graphs of that radius at orders `1..=order`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn radmax_search_json(
    order: usize,
    radius: u32,
    shard_count: u64,
    shard_index: u64,
    out: *mut *mut c_char,
) -> RadmaxStatus {
    guard(|| {
        let shard = ShardSpec { index: shard_index, count: shard_count };
        let report = if radius == 0 {
            search::check_bound_all_sharded(order, shard)
        } else {
            search::min_order_nonselfcentered_sharded(radius, order, shard)
        };
        match report {
            Ok(r) => write_string(out, serde_json::to_string(&r).expect("serializable")),
            Err(e) => fail(e),
        }
    })
}
