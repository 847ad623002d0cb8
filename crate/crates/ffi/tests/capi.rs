use std::ffi::CStr;
use std::process::Command;
use std::ptr;

use lyndon::oracle;
use lyndon_ffi::*;

const TEXT: &[u8] = b"northamerica";

fn build(text: &[u8]) -> *mut LyndonTree {
    let mut tree = ptr::null_mut();
    assert_eq!(unsafe { lyndon_tree_build(text.as_ptr(), text.len(), &mut tree) }, LyndonStatus::Ok);
    assert!(!tree.is_null());
    tree
}

fn ask(f: unsafe extern "C" fn(*const LyndonTree, usize, *mut usize) -> LyndonStatus, t: *const LyndonTree, i: usize) -> Result<usize, LyndonStatus> {
    let mut out = usize::MAX;
    match unsafe { f(t, i, &mut out) } {
        LyndonStatus::Ok => Ok(out),
        s => Err(s),
    }
}

#[test]
fn plain_array_matches_reference() {
    let mut out = vec![0u64; TEXT.len()];
    let status = unsafe { lyndon_build_plain(TEXT.as_ptr(), TEXT.len(), out.as_mut_ptr(), out.len()) };
    assert_eq!(status, LyndonStatus::Ok);
    assert_eq!(out, [4, 3, 2, 1, 1, 6, 1, 3, 1, 1, 1, 1]);

    let mut short = vec![0u64; 3];
    let status = unsafe { lyndon_build_plain(TEXT.as_ptr(), TEXT.len(), short.as_mut_ptr(), short.len()) };
    assert_eq!(status, LyndonStatus::BufferTooSmall);
    assert_eq!(unsafe { lyndon_build_plain(ptr::null(), 0, ptr::null_mut(), 0) }, LyndonStatus::Ok);
    assert_eq!(unsafe { lyndon_build_plain(ptr::null(), 4, out.as_mut_ptr(), 4) }, LyndonStatus::NullPointer);
}

#[test]
fn tree_queries_match_oracles() {
    let text = lyndon::gen::random(500, 3, 11);
    let tree = build(&text);
    let lam = oracle::lyndon_array_bruteforce(&text);
    let pss = oracle::pss_bruteforce(&text);
    let nss = oracle::nss_bruteforce(&text);
    let mut n = 0;
    assert_eq!(unsafe { lyndon_tree_text_len(tree, &mut n) }, LyndonStatus::Ok);
    assert_eq!(n, 500);
    for i in 1..=n {
        assert_eq!(ask(lyndon_tree_lambda, tree, i), Ok(lam.get(i)));
        assert_eq!(ask(lyndon_tree_pss, tree, i), Ok(pss.get(i)));
        assert_eq!(ask(lyndon_tree_nss, tree, i), Ok(nss.get(i)));
        assert_eq!(ask(lyndon_tree_parent, tree, i), Ok(pss.get(i)));
        assert_eq!(ask(lyndon_tree_subtree_size, tree, i), Ok(lam.get(i)));
    }
    assert_eq!(ask(lyndon_tree_subtree_size, tree, 0), Ok(n + 1));
    assert_eq!(ask(lyndon_tree_lambda, tree, 0), Err(LyndonStatus::Usage));
    assert_eq!(ask(lyndon_tree_lambda, tree, n + 1), Err(LyndonStatus::Usage));
    unsafe { lyndon_tree_free(tree) };
}

#[test]
fn encode_decode_round_trip() {
    let tree = build(TEXT);
    let mut needed = 0;
    let status = unsafe { lyndon_tree_encode(tree, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, LyndonStatus::BufferTooSmall);
    let mut buf = vec![0u8; needed];
    let mut written = 0;
    assert_eq!(unsafe { lyndon_tree_encode(tree, buf.as_mut_ptr(), buf.len(), &mut written) }, LyndonStatus::Ok);
    assert_eq!(written, needed);
    assert_eq!(&buf[..4], b"LBPS");

    let mut copy = ptr::null_mut();
    assert_eq!(unsafe { lyndon_tree_decode(buf.as_ptr(), buf.len(), &mut copy) }, LyndonStatus::Ok);
    for i in 1..=TEXT.len() {
        assert_eq!(ask(lyndon_tree_lambda, copy, i), ask(lyndon_tree_lambda, tree, i));
    }
    assert_eq!(ask(lyndon_tree_pss, copy, 11), Ok(6));

    let mut bad = ptr::null_mut();
    let status = unsafe { lyndon_tree_decode(buf.as_ptr(), buf.len() - 1, &mut bad) };
    assert_eq!(status, LyndonStatus::Integrity);
    assert!(bad.is_null());
    unsafe {
        lyndon_tree_free(copy);
        lyndon_tree_free(tree);
    }
}

#[test]
fn empty_text_has_a_root_only() {
    let mut tree = ptr::null_mut();
    assert_eq!(unsafe { lyndon_tree_build(ptr::null(), 0, &mut tree) }, LyndonStatus::Ok);
    assert_eq!(ask(lyndon_tree_subtree_size, tree, 0), Ok(1));
    assert_eq!(ask(lyndon_tree_lambda, tree, 1), Err(LyndonStatus::Usage));
    unsafe { lyndon_tree_free(tree) };
}

#[test]
fn null_arguments_are_reported() {
    let mut out = 0;
    assert_eq!(unsafe { lyndon_tree_text_len(ptr::null(), &mut out) }, LyndonStatus::NullPointer);
    assert_eq!(ask(lyndon_tree_nss, ptr::null(), 1), Err(LyndonStatus::NullPointer));
    assert_eq!(unsafe { lyndon_tree_build(TEXT.as_ptr(), TEXT.len(), ptr::null_mut()) }, LyndonStatus::NullPointer);
    let tree = build(TEXT);
    assert_eq!(unsafe { lyndon_tree_lambda(tree, 1, ptr::null_mut()) }, LyndonStatus::NullPointer);
    assert_eq!(unsafe { lyndon_tree_encode(tree, ptr::null_mut(), 1 << 20, &mut out) }, LyndonStatus::NullPointer);
    unsafe {
        lyndon_tree_free(tree);
        lyndon_tree_free(ptr::null_mut());
    }
}

#[test]
fn every_status_has_a_message() {
    for s in [
        LyndonStatus::Ok,
        LyndonStatus::NullPointer,
        LyndonStatus::Usage,
        LyndonStatus::Integrity,
        LyndonStatus::BufferTooSmall,
        LyndonStatus::Panic,
    ] {
        let msg = unsafe { CStr::from_ptr(lyndon_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
}

#[test]
fn header_declares_the_api_and_compiles() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/lyndon.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["typedef struct LyndonTree LyndonTree", "LYNDON_STATUS_BUFFER_TOO_SMALL = 4", "lyndon_tree_encode("] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header]).status() else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(status.success());
}
