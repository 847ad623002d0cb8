#ifndef LYNDON_H
#define LYNDON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LyndonStatus {
  LYNDON_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LYNDON_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range, such as a query index past the text.
   */
  LYNDON_STATUS_USAGE = 2,
  /**
   * Input bytes do not form a valid LBPS encoding.
   */
  LYNDON_STATUS_INTEGRITY = 3,
  /**
   * The output buffer is too small; the required size was reported.
   */
  LYNDON_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * The library panicked. The handle arguments remain valid.
   */
  LYNDON_STATUS_PANIC = 5,
} LyndonStatus;

/**
 * A finalized previous-smaller-suffix tree.
 */
typedef struct LyndonTree LyndonTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Writes `λ[1..=len]` of the text to `out[0..len]`.
 *
 * # Safety
 * `text` must point to `len` readable bytes and `out` to `out_len`
 * writable `uint64_t` values. Either may be null when its length is 0.
 */
enum LyndonStatus lyndon_build_plain(const uint8_t *text,
                                     size_t len,
                                     uint64_t *out,
                                     size_t out_len);

/**
 * Builds the succinct tree of the text and stores a new handle in `*out`.
 *
 * # Safety
 * `text` must point to `len` readable bytes (or be null with `len` 0) and
 * `out` must be writable.
 */
enum LyndonStatus lyndon_tree_build(const uint8_t *text, size_t len, struct LyndonTree **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `tree` must be null or a handle from this library not yet freed.
 */
void lyndon_tree_free(struct LyndonTree *tree);

/**
 * Length `n` of the text the tree was built from.
 *
 * # Safety
 * `tree` must be a live handle and `out` writable.
 */
enum LyndonStatus lyndon_tree_text_len(const struct LyndonTree *tree, size_t *out);

/**
 * `λ[i]` for `1 ≤ i ≤ n`.
 *
 * # Safety
 * `tree` must be a live handle and `out` writable.
 */
enum LyndonStatus lyndon_tree_lambda(const struct LyndonTree *tree, size_t i, size_t *out);

/**
 * Next smaller suffix of position `i`, `n + 1` if none.
 *
 * # Safety
 * `tree` must be a live handle and `out` writable.
 */
enum LyndonStatus lyndon_tree_nss(const struct LyndonTree *tree, size_t i, size_t *out);

/**
 * Previous smaller suffix of position `i`, `0` if none.
 *
 * # Safety
 * `tree` must be a live handle and `out` writable.
 */
enum LyndonStatus lyndon_tree_pss(const struct LyndonTree *tree, size_t i, size_t *out);

/**
 * Parent of node `i`, for `1 ≤ i ≤ n`.
 *
 * # Safety
 * `tree` must be a live handle and `out` writable.
 */
enum LyndonStatus lyndon_tree_parent(const struct LyndonTree *tree, size_t i, size_t *out);

/**
 * Number of nodes in the subtree of node `i`, for `0 ≤ i ≤ n`.
 *
 * # Safety
 * `tree` must be a live handle and `out` writable.
 */
enum LyndonStatus lyndon_tree_subtree_size(const struct LyndonTree *tree, size_t i, size_t *out);

/**
 * Serializes the tree in the LBPS format. `*written` receives the encoded
 * size; when it exceeds `cap` nothing is copied and the status is
 * `LYNDON_STATUS_BUFFER_TOO_SMALL`. Pass `cap` 0 to query the size.
 *
 * # Safety
 * `tree` must be a live handle, `buf` must hold `cap` writable bytes (or
 * be null with `cap` 0), and `written` must be writable.
 */
enum LyndonStatus lyndon_tree_encode(const struct LyndonTree *tree,
                                     uint8_t *buf,
                                     size_t cap,
                                     size_t *written);

/**
 * Parses LBPS bytes into a new handle stored in `*out`.
 *
 * # Safety
 * `data` must point to `len` readable bytes and `out` must be writable.
 */
enum LyndonStatus lyndon_tree_decode(const uint8_t *data, size_t len, struct LyndonTree **out);

/**
 * A static, NUL-terminated description of a status code.
 */
const char *lyndon_status_message(enum LyndonStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LYNDON_H */
