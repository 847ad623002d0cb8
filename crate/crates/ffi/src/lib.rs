//! C interface to the `lyndon` crate.
//!
//! Every function returns a [`LyndonStatus`] and delivers results through
//! out pointers. Trees live behind opaque [`LyndonTree`] handles that the
//! caller releases with [`lyndon_tree_free`]. Panics never cross the
//! boundary; they surface as `LYNDON_STATUS_PANIC`.
//!
//! Text positions are 1-based as in the Rust API. Node `0` is the root.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::{ptr, slice};

use lyndon::{format, Error, SuccinctPssTree};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LyndonStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range, such as a query index past the text.
    Usage = 2,
    /// Input bytes do not form a valid LBPS encoding.
    Integrity = 3,
    /// The output buffer is too small; the required size was reported.
    BufferTooSmall = 4,
    /// The library panicked. The handle arguments remain valid.
    Panic = 5,
}

/// A finalized previous-smaller-suffix tree.
pub struct LyndonTree(SuccinctPssTree);

impl From<Error> for LyndonStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) | Error::Verification(_) => LyndonStatus::Integrity,
            Error::Usage(_) | Error::Io(_) => LyndonStatus::Usage,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), LyndonStatus>) -> LyndonStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LyndonStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => LyndonStatus::Panic,
    }
}

/// Borrows `len` bytes at `data`; `data` may be null only when `len` is 0.
unsafe fn bytes<'a>(data: *const u8, len: usize) -> Result<&'a [u8], LyndonStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(LyndonStatus::NullPointer);
    }
    // SAFETY: the caller promises `len` readable bytes at `data`.
    Ok(unsafe { slice::from_raw_parts(data, len) })
}

unsafe fn tree_ref<'a>(tree: *const LyndonTree) -> Result<&'a SuccinctPssTree, LyndonStatus> {
    // SAFETY: a non-null handle came from this library and is not freed.
    unsafe { tree.as_ref() }.map(|t| &t.0).ok_or(LyndonStatus::NullPointer)
}

fn put<T>(out: *mut T, value: T) -> Result<(), LyndonStatus> {
    if out.is_null() {
        return Err(LyndonStatus::NullPointer);
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { out.write(value) };
    Ok(())
}

/// Writes `λ[1..=len]` of the text to `out[0..len]`.
///
/// # Safety
/// `text` must point to `len` readable bytes and `out` to `out_len`
/// writable `uint64_t` values. Either may be null when its length is 0.
#[no_mangle]
pub unsafe extern "C" fn lyndon_build_plain(
    text: *const u8,
    len: usize,
    out: *mut u64,
    out_len: usize,
) -> LyndonStatus {
    guard(|| {
        let text = unsafe { bytes(text, len)? };
        if out_len < len {
            return Err(LyndonStatus::BufferTooSmall);
        }
        if len == 0 {
            return Ok(());
        }
        if out.is_null() {
            return Err(LyndonStatus::NullPointer);
        }
        // SAFETY: the caller provides `out_len ≥ len` writable values.
        let out = unsafe { slice::from_raw_parts_mut(out, len) };
        lyndon::build_plain_into(text, out, &mut ());
        Ok(())
    })
}

/// Builds the succinct tree of the text and stores a new handle in `*out`.
///
/// # Safety
/// `text` must point to `len` readable bytes (or be null with `len` 0) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_build(text: *const u8, len: usize, out: *mut *mut LyndonTree) -> LyndonStatus {
    guard(|| {
        let text = unsafe { bytes(text, len)? };
        if out.is_null() {
            return Err(LyndonStatus::NullPointer);
        }
        let tree = lyndon::build_succinct(text).finalize()?;
        put(out, Box::into_raw(Box::new(LyndonTree(tree))))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `tree` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_free(tree: *mut LyndonTree) {
    if !tree.is_null() {
        // SAFETY: the handle was created by `Box::into_raw` here.
        drop(unsafe { Box::from_raw(tree) });
    }
}

/// Length `n` of the text the tree was built from.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_text_len(tree: *const LyndonTree, out: *mut usize) -> LyndonStatus {
    guard(|| put(out, unsafe { tree_ref(tree)? }.text_len()))
}

unsafe fn query(
    tree: *const LyndonTree,
    i: usize,
    out: *mut usize,
    f: fn(&SuccinctPssTree, usize) -> lyndon::Result<usize>,
) -> LyndonStatus {
    guard(|| {
        let tree = unsafe { tree_ref(tree)? };
        put(out, f(tree, i)?)
    })
}

/// `λ[i]` for `1 ≤ i ≤ n`.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_lambda(tree: *const LyndonTree, i: usize, out: *mut usize) -> LyndonStatus {
    unsafe { query(tree, i, out, SuccinctPssTree::lambda) }
}

/// Next smaller suffix of position `i`, `n + 1` if none.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_nss(tree: *const LyndonTree, i: usize, out: *mut usize) -> LyndonStatus {
    unsafe { query(tree, i, out, SuccinctPssTree::nss) }
}

/// Previous smaller suffix of position `i`, `0` if none.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_pss(tree: *const LyndonTree, i: usize, out: *mut usize) -> LyndonStatus {
    unsafe { query(tree, i, out, SuccinctPssTree::pss) }
}

/// Parent of node `i`, for `1 ≤ i ≤ n`.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_parent(tree: *const LyndonTree, i: usize, out: *mut usize) -> LyndonStatus {
    unsafe { query(tree, i, out, SuccinctPssTree::parent) }
}

/// Number of nodes in the subtree of node `i`, for `0 ≤ i ≤ n`.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_subtree_size(tree: *const LyndonTree, i: usize, out: *mut usize) -> LyndonStatus {
    unsafe { query(tree, i, out, SuccinctPssTree::subtree_size) }
}

/// Serializes the tree in the LBPS format. `*written` receives the encoded
/// size; when it exceeds `cap` nothing is copied and the status is
/// `LYNDON_STATUS_BUFFER_TOO_SMALL`. Pass `cap` 0 to query the size.
///
/// # Safety
/// `tree` must be a live handle, `buf` must hold `cap` writable bytes (or
/// be null with `cap` 0), and `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_encode(
    tree: *const LyndonTree,
    buf: *mut u8,
    cap: usize,
    written: *mut usize,
) -> LyndonStatus {
    guard(|| {
        let tree = unsafe { tree_ref(tree)? };
        let encoded = format::encode_lbps(tree);
        put(written, encoded.len())?;
        if encoded.len() > cap {
            return Err(LyndonStatus::BufferTooSmall);
        }
        if buf.is_null() {
            return Err(LyndonStatus::NullPointer);
        }
        // SAFETY: `buf` holds at least `cap ≥ encoded.len()` bytes.
        unsafe { ptr::copy_nonoverlapping(encoded.as_ptr(), buf, encoded.len()) };
        Ok(())
    })
}

/// Parses LBPS bytes into a new handle stored in `*out`.
///
/// # Safety
/// `data` must point to `len` readable bytes and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lyndon_tree_decode(data: *const u8, len: usize, out: *mut *mut LyndonTree) -> LyndonStatus {
    guard(|| {
        let data = unsafe { bytes(data, len)? };
        if out.is_null() {
            return Err(LyndonStatus::NullPointer);
        }
        let tree = format::decode_lbps(data)?;
        put(out, Box::into_raw(Box::new(LyndonTree(tree))))
    })
}

/// A static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn lyndon_status_message(status: LyndonStatus) -> *const c_char {
    let s: &'static std::ffi::CStr = match status {
        LyndonStatus::Ok => c"ok",
        LyndonStatus::NullPointer => c"null pointer argument",
        LyndonStatus::Usage => c"argument out of range",
        LyndonStatus::Integrity => c"malformed LBPS data",
        LyndonStatus::BufferTooSmall => c"output buffer too small",
        LyndonStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}
