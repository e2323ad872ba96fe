#ifndef LRQ_H
#define LRQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which product [`lrq_graph_sum_product`] computes.
 */
typedef enum LrqAlgebra {
  /**
   * The quantized product on all graphs.
   */
  LRQ_ALGEBRA_FULL = 0,
  /**
   * The product followed by projection to regular graphs.
   */
  LRQ_ALGEBRA_REG = 1,
} LrqAlgebra;

typedef enum LrqSpace {
  LRQ_SPACE_FULL = 0,
  LRQ_SPACE_REG = 1,
  LRQ_SPACE_TOP_REC = 2,
} LrqSpace;

typedef enum LrqStatus {
  LRQ_STATUS_OK = 0,
  LRQ_STATUS_NULL_POINTER = 1,
  LRQ_STATUS_PARSE_ERROR = 2,
  LRQ_STATUS_DOMAIN_ERROR = 3,
  LRQ_STATUS_UTF8_ERROR = 4,
  LRQ_STATUS_PANIC = 5,
} LrqStatus;

/**
 * Opaque handle to a graph sum.
 */
typedef struct LrqGraphSum LrqGraphSum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the sum grammar, e.g. `"1/2*(|v|) - (|o|)"`.
 *
 * # Safety
 * `input` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_parse(const char *input, struct LrqGraphSum **out);

/**
 * # Safety
 * `sum` must be null or a handle from this library not yet freed.
 */
void lrq_graph_sum_free(struct LrqGraphSum *sum);

/**
 * Canonical text form; free the result with [`lrq_string_free`].
 *
 * # Safety
 * `sum` must be a live handle and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_to_string(const struct LrqGraphSum *sum, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_product(const struct LrqGraphSum *a,
                                     const struct LrqGraphSum *b,
                                     enum LrqAlgebra algebra,
                                     struct LrqGraphSum **out);

/**
 * The coproduct as text in the tensor grammar (`a@b + ...`).
 *
 * # Safety
 * `sum` must be a live handle and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_coproduct(const struct LrqGraphSum *sum, char **out);

/**
 * # Safety
 * `sum` must be a live handle and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_antipode(const struct LrqGraphSum *sum, struct LrqGraphSum **out);

/**
 * The counit as an exact rational in text form (`"n"` or `"n/d"`).
 *
 * # Safety
 * `sum` must be a live handle and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_counit(const struct LrqGraphSum *sum, char **out);

/**
 * The quantum differential; `LRQ_SPACE_REG` and `LRQ_SPACE_TOP_REC` both
 * project to regular graphs.
 *
 * # Safety
 * `sum` must be a live handle and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_dh(const struct LrqGraphSum *sum,
                                enum LrqSpace space,
                                struct LrqGraphSum **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum LrqStatus lrq_graph_sum_equal(const struct LrqGraphSum *a,
                                   const struct LrqGraphSum *b,
                                   bool *out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum LrqStatus lrq_cohomology_dim(size_t order, size_t genus, enum LrqSpace space, size_t *out);

/**
 * `W^g_k` on the Airy curve as text, e.g. `"1/16 * p^-4"`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LrqStatus lrq_airy_correlator(uint32_t genus, uint32_t legs, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void lrq_string_free(char *s);

/**
 * Message for the last failed call on this thread (empty after success).
 * The pointer stays valid until the next library call on the same thread.
 */
const char *lrq_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LRQ_H */
