//! C ABI over connpack. Graphs and packings are opaque heap handles freed by
//! their `*_free` function. Every call returns a [`ConnStatus`]; on failure
//! `connpack_last_error` describes the problem for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use connpack::cds::{cds_pack_centralized, CdsParams};
use connpack::graph::gen_gnp;
use connpack::oracles::{
    edge_connectivity, verify_dominating_packing, verify_spanning_packing, vertex_connectivity,
};
use connpack::st::{st_pack_general, ExactEstimator, StParams};
use connpack::{Error, Graph, TreePacking};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Io = 3,
    Parse = 4,
    Disconnected = 5,
    Validation = 6,
    Bound = 7,
    OutOfRange = 8,
    Panic = 9,
    Internal = 10,
}

/// Opaque graph handle.
pub struct ConnGraph(Graph);

/// Opaque weighted tree collection.
pub struct ConnPacking(TreePacking);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> ConnStatus {
    match e {
        Error::Io(_) => ConnStatus::Io,
        Error::Parse { .. } | Error::Json(_) => ConnStatus::Parse,
        Error::Ids(_) | Error::InvalidParam(_) => ConnStatus::InvalidArgument,
        Error::Disconnected => ConnStatus::Disconnected,
        Error::Validation(_) => ConnStatus::Validation,
        Error::Bound(_) => ConnStatus::Bound,
        _ => ConnStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (ConnStatus, String)>) -> ConnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ConnStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside connpack");
            ConnStatus::Panic
        }
    }
}

fn lib<T>(r: connpack::Result<T>) -> Result<T, (ConnStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (ConnStatus, String) {
    (ConnStatus::NullPointer, "null pointer argument".into())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (ConnStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (ConnStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn connpack_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `m` edges given as `2*m` endpoint ids.
///
/// # Safety
/// `edges` must point to `2*m` readable `size_t` values (or be null when `m == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut ConnGraph,
) -> ConnStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        let g = lib(Graph::from_edges(n, &pairs))?;
        write(out, Box::into_raw(Box::new(ConnGraph(g))))
    })
}

/// Reads an edge-list file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_graph_load(
    path: *const c_char,
    remap: bool,
    out: *mut *mut ConnGraph,
) -> ConnStatus {
    guard(|| {
        if path.is_null() {
            return Err(null());
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| (ConnStatus::InvalidArgument, "path is not UTF-8".to_string()))?;
        let g = lib(connpack::graph::load_graph(path, remap))?;
        write(out, Box::into_raw(Box::new(ConnGraph(g))))
    })
}

/// Erdős–Rényi graph, deterministic per seed.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_graph_gnp(
    n: usize,
    p: f64,
    seed: u64,
    out: *mut *mut ConnGraph,
) -> ConnStatus {
    guard(|| {
        if !(0.0..=1.0).contains(&p) {
            return Err((
                ConnStatus::InvalidArgument,
                format!("edge probability {p} outside [0, 1]"),
            ));
        }
        write(out, Box::into_raw(Box::new(ConnGraph(gen_gnp(n, p, seed)))))
    })
}

/// # Safety
/// `g` must come from a `connpack_graph_*` constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn connpack_graph_free(g: *mut ConnGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle and `n`, `m` writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_graph_size(
    g: *const ConnGraph,
    n: *mut usize,
    m: *mut usize,
) -> ConnStatus {
    guard(|| {
        let g = &deref(g)?.0;
        write(n, g.n())?;
        write(m, g.m())
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_vertex_connectivity(
    g: *const ConnGraph,
    out: *mut usize,
) -> ConnStatus {
    guard(|| write(out, vertex_connectivity(&deref(g)?.0)))
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_edge_connectivity(
    g: *const ConnGraph,
    out: *mut usize,
) -> ConnStatus {
    guard(|| write(out, edge_connectivity(&deref(g)?.0)))
}

/// Fractional dominating-tree packing (centralized). `classes` receives the class count.
///
/// # Safety
/// `g` must be a live graph handle; `out` and `classes` writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_cds_pack(
    g: *const ConnGraph,
    k_guess: usize,
    seed: u64,
    out: *mut *mut ConnPacking,
    classes: *mut usize,
) -> ConnStatus {
    guard(|| {
        let p = lib(cds_pack_centralized(
            &deref(g)?.0,
            k_guess,
            &CdsParams::with_seed(seed),
        ))?;
        write(classes, p.t)?;
        write(out, Box::into_raw(Box::new(ConnPacking(p.trees))))
    })
}

/// Fractional spanning-tree packing with accuracy `epsilon`.
///
/// # Safety
/// `g` must be a live graph handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_st_pack(
    g: *const ConnGraph,
    epsilon: f64,
    seed: u64,
    out: *mut *mut ConnPacking,
) -> ConnStatus {
    guard(|| {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err((
                ConnStatus::InvalidArgument,
                format!("epsilon {epsilon} outside (0, 1)"),
            ));
        }
        let p = lib(st_pack_general(
            &deref(g)?.0,
            &StParams::with_epsilon(epsilon),
            seed,
            None,
            &ExactEstimator,
        ))?;
        write(out, Box::into_raw(Box::new(ConnPacking(p.trees))))
    })
}

/// # Safety
/// `p` must come from a packing constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn connpack_packing_free(p: *mut ConnPacking) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live packing handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_packing_summary(
    p: *const ConnPacking,
    trees: *mut usize,
    total_weight: *mut f64,
) -> ConnStatus {
    guard(|| {
        let p = &deref(p)?.0;
        write(trees, p.len())?;
        write(total_weight, p.total_weight())
    })
}

/// Copies tree `index`'s edges into `buf` as `2*edges` endpoint ids. Call with
/// `buf == NULL` to learn `edges` first; `capacity` counts edges.
///
/// # Safety
/// `p` must be a live packing handle; `buf` must hold `2*capacity` values when non-null.
#[no_mangle]
pub unsafe extern "C" fn connpack_packing_tree(
    p: *const ConnPacking,
    index: usize,
    weight: *mut f64,
    edges: *mut usize,
    buf: *mut usize,
    capacity: usize,
) -> ConnStatus {
    guard(|| {
        let p = &deref(p)?.0;
        let tree = p.trees.get(index).ok_or_else(|| {
            (
                ConnStatus::OutOfRange,
                format!("tree {index} of {}", p.len()),
            )
        })?;
        write(weight, tree.weight)?;
        write(edges, tree.edges.len())?;
        if buf.is_null() {
            return Ok(());
        }
        if capacity < tree.edges.len() {
            return Err((
                ConnStatus::OutOfRange,
                format!("buffer holds {capacity} of {} edges", tree.edges.len()),
            ));
        }
        let out = std::slice::from_raw_parts_mut(buf, 2 * tree.edges.len());
        for (i, &[a, b]) in tree.edges.iter().enumerate() {
            out[2 * i] = a;
            out[2 * i + 1] = b;
        }
        Ok(())
    })
}

/// Checks `p` against `g`: as dominating trees with per-vertex load when
/// `dominating`, otherwise as spanning trees with per-edge load.
///
/// # Safety
/// Handles must be live; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_packing_verify(
    g: *const ConnGraph,
    p: *const ConnPacking,
    dominating: bool,
    valid: *mut bool,
    max_load: *mut f64,
) -> ConnStatus {
    guard(|| {
        let (g, p) = (&deref(g)?.0, &deref(p)?.0);
        let r = if dominating {
            verify_dominating_packing(g, p)
        } else {
            verify_spanning_packing(g, p)
        };
        write(valid, r.valid)?;
        write(
            max_load,
            if dominating {
                r.max_vertex_load
            } else {
                r.max_edge_load
            },
        )
    })
}

/// JSON text of the packing, freed with `connpack_string_free`.
///
/// # Safety
/// `p` must be a live packing handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn connpack_packing_to_json(
    p: *const ConnPacking,
    out: *mut *mut c_char,
) -> ConnStatus {
    guard(|| {
        let text = lib(serde_json::to_string(&deref(p)?.0).map_err(Error::from))?;
        let c = CString::new(text).map_err(|e| (ConnStatus::Internal, e.to_string()))?;
        write(out, c.into_raw())
    })
}

/// # Safety
/// `s` must come from `connpack_packing_to_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn connpack_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
