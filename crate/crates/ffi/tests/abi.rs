use std::ffi::{CStr, CString};
use std::ptr;

use connpack_ffi::*;

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(connpack_last_error())
            .to_string_lossy()
            .into_owned()
    }
}

fn clique(n: usize) -> *mut ConnGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.extend([u, v]);
        }
    }
    let mut g = ptr::null_mut();
    let st = unsafe { connpack_graph_from_edges(n, edges.as_ptr(), edges.len() / 2, &mut g) };
    assert_eq!(st, ConnStatus::Ok);
    g
}

#[test]
fn connectivity_of_k6() {
    let g = clique(6);
    let (mut n, mut m, mut k, mut l) = (0, 0, 0, 0);
    unsafe {
        assert_eq!(connpack_graph_size(g, &mut n, &mut m), ConnStatus::Ok);
        assert_eq!(connpack_vertex_connectivity(g, &mut k), ConnStatus::Ok);
        assert_eq!(connpack_edge_connectivity(g, &mut l), ConnStatus::Ok);
        connpack_graph_free(g);
    }
    assert_eq!((n, m, k, l), (6, 15, 5, 5));
}

#[test]
fn spanning_packing_round_trip() {
    let g = clique(8);
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(connpack_st_pack(g, 0.1, 1, &mut p), ConnStatus::Ok);
        let (mut trees, mut total) = (0, 0.0);
        assert_eq!(
            connpack_packing_summary(p, &mut trees, &mut total),
            ConnStatus::Ok
        );
        assert!(total >= 3.0 / 1.6 - 1e-9);
        let (mut w, mut e) = (0.0, 0);
        assert_eq!(
            connpack_packing_tree(p, 0, &mut w, &mut e, ptr::null_mut(), 0),
            ConnStatus::Ok
        );
        assert_eq!(e, 7);
        let mut buf = vec![0usize; 2 * e];
        assert_eq!(
            connpack_packing_tree(p, 0, &mut w, &mut e, buf.as_mut_ptr(), e),
            ConnStatus::Ok
        );
        assert!(buf.iter().all(|&v| v < 8));
        assert_eq!(
            connpack_packing_tree(p, trees, &mut w, &mut e, ptr::null_mut(), 0),
            ConnStatus::OutOfRange
        );
        let (mut valid, mut load) = (false, 0.0);
        assert_eq!(
            connpack_packing_verify(g, p, false, &mut valid, &mut load),
            ConnStatus::Ok
        );
        assert!(valid && load <= 1.0 + 1e-9);
        let mut json = ptr::null_mut();
        assert_eq!(connpack_packing_to_json(p, &mut json), ConnStatus::Ok);
        assert!(CStr::from_ptr(json)
            .to_str()
            .unwrap()
            .starts_with("{\"trees\""));
        connpack_string_free(json);
        connpack_packing_free(p);
        connpack_graph_free(g);
    }
}

#[test]
fn dominating_packing_of_clique() {
    let g = clique(32);
    let (mut p, mut t) = (ptr::null_mut(), 0);
    unsafe {
        assert_eq!(connpack_cds_pack(g, 31, 4, &mut p, &mut t), ConnStatus::Ok);
        let (mut valid, mut load) = (false, 0.0);
        assert_eq!(
            connpack_packing_verify(g, p, true, &mut valid, &mut load),
            ConnStatus::Ok
        );
        assert!(valid && load <= 1.0 + 1e-9);
        connpack_packing_free(p);
        connpack_graph_free(g);
    }
    assert_eq!(t, 7);
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    let bad = [0usize, 0];
    unsafe {
        assert_eq!(
            connpack_graph_from_edges(2, bad.as_ptr(), 1, &mut g),
            ConnStatus::Validation
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            connpack_graph_from_edges(2, ptr::null(), 1, &mut g),
            ConnStatus::NullPointer
        );
        let path = CString::new("/nonexistent/graph.el").unwrap();
        assert_eq!(
            connpack_graph_load(path.as_ptr(), false, &mut g),
            ConnStatus::Io
        );
        let mut k = 0;
        assert_eq!(
            connpack_vertex_connectivity(ptr::null(), &mut k),
            ConnStatus::NullPointer
        );
        let two = [0usize, 1, 2, 3];
        assert_eq!(
            connpack_graph_from_edges(4, two.as_ptr(), 2, &mut g),
            ConnStatus::Ok
        );
        let mut p = ptr::null_mut();
        assert_eq!(
            connpack_st_pack(g, 0.1, 0, &mut p),
            ConnStatus::Disconnected
        );
        assert_eq!(
            connpack_st_pack(g, 2.0, 0, &mut p),
            ConnStatus::InvalidArgument
        );
        connpack_graph_free(g);
        let mut n = 0;
        assert_eq!(
            connpack_graph_size(ptr::null(), &mut n, ptr::null_mut()),
            ConnStatus::NullPointer
        );
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/connpack.h");
    for name in [
        "connpack_last_error",
        "connpack_graph_from_edges",
        "connpack_graph_load",
        "connpack_graph_gnp",
        "connpack_graph_free",
        "connpack_graph_size",
        "connpack_vertex_connectivity",
        "connpack_edge_connectivity",
        "connpack_cds_pack",
        "connpack_st_pack",
        "connpack_packing_free",
        "connpack_packing_summary",
        "connpack_packing_tree",
        "connpack_packing_verify",
        "connpack_packing_to_json",
        "connpack_string_free",
    ] {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}
