#ifndef TILTING_H
#define TILTING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which algebra of a glued file a query refers to.
 */
typedef enum TiltingSide {
  TILTING_SIDE_A = 0,
  TILTING_SIDE_B = 1,
  TILTING_SIDE_C = 2,
} TiltingSide;

/**
 * Result of every call. The numeric values match the CLI exit codes.
 */
typedef enum TiltingStatus {
  TILTING_STATUS_OK = 0,
  /**
   * Parse, usage or algebra-shape error.
   */
  TILTING_STATUS_INPUT = 2,
  TILTING_STATUS_REPRESENTATION_INFINITE = 3,
  /**
   * A checked postcondition failed or a search was undecided.
   */
  TILTING_STATUS_INVARIANT = 4,
  TILTING_STATUS_TABLE_MISMATCH = 5,
  TILTING_STATUS_NULL_ARGUMENT = 6,
  TILTING_STATUS_OUT_OF_RANGE = 7,
  TILTING_STATUS_PANIC = 8,
} TiltingStatus;

/**
 * A parsed file with its support τ-tilting enumerations.
 */
typedef struct TiltingDocument TiltingDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a quiver or glued-algebra file over `F_p` and enumerates its
 * support τ-tilting pairs. `seed` drives the randomized searches.
 *
 * # Safety
 * `source` must be a nul-terminated string and `out` a valid pointer.
 */
enum TiltingStatus tilting_document_parse(const char *source,
                                          uint32_t p,
                                          uint64_t seed,
                                          struct TiltingDocument **out);

/**
 * Releases a document. Null is ignored.
 *
 * # Safety
 * `doc` must come from `tilting_document_parse` and not be used afterwards.
 */
void tilting_document_free(struct TiltingDocument *doc);

/**
 * Number of vertices of the algebra on `side`.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_vertex_count(const struct TiltingDocument *doc,
                                        enum TiltingSide side,
                                        size_t *out);

/**
 * Number of support τ-tilting pairs of the algebra on `side`.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_stt_count(const struct TiltingDocument *doc,
                                     enum TiltingSide side,
                                     size_t *out);

/**
 * Name of pair `index` on `side`, summands joined by `⊕` and `0` for the
 * zero module. Free the result with `tilting_string_free`.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_stt_name(const struct TiltingDocument *doc,
                                    enum TiltingSide side,
                                    size_t index,
                                    char **out);

/**
 * Number of covering relations in the Hasse quiver on `side`.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_hasse_edge_count(const struct TiltingDocument *doc,
                                            enum TiltingSide side,
                                            size_t *out);

/**
 * Number of maximal green sequences on `side`.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_mgs_count(const struct TiltingDocument *doc,
                                     enum TiltingSide side,
                                     size_t *out);

/**
 * Glues `B`-pair `x` with `C`-pair `y` and writes the index of the result
 * among the `A`-pairs.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_glue(const struct TiltingDocument *doc, size_t x, size_t y, size_t *out);

/**
 * Number of named modules in the file.
 *
 * # Safety
 * `doc` and `out` must be valid pointers.
 */
enum TiltingStatus tilting_module_count(const struct TiltingDocument *doc, size_t *out);

/**
 * Recomputes the built-in tables over `F_p`; writes the number of failed
 * checks and returns `TableMismatch` when it is nonzero.
 *
 * # Safety
 * `failures` must be a valid pointer.
 */
enum TiltingStatus tilting_verify_tables(uint32_t p, size_t *failures);

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library and valid until the next call on the same thread.
 */
const char *tilting_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void tilting_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TILTING_H */
