/* C interface to the commring library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a commring_status;
 * on failure commring_last_error() describes the problem for the calling
 * thread. Strings returned through char** out-parameters are released with
 * commring_string_free. All functions are safe to call concurrently on
 * distinct handles; ring handles are immutable and may be shared.
 */
#ifndef COMMRING_H
#define COMMRING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COMMRING_API __declspec(dllexport)
#else
#define COMMRING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum commring_status {
  COMMRING_OK = 0,
  COMMRING_ERR_PARSE = 1,
  COMMRING_ERR_AXIOM = 2,
  COMMRING_ERR_IO = 3,
  COMMRING_ERR_INVALID_ARGUMENT = 4,
  COMMRING_ERR_SEARCH_SPACE = 5,
  COMMRING_ERR_CAP_EXCEEDED = 6,
  COMMRING_ERR_UNSUPPORTED = 7,
  COMMRING_ERR_INTERNAL = 8,
  /* commring_catalog_next: enumeration finished, no ring returned */
  COMMRING_DONE = 9
} commring_status;

typedef struct commring_ring commring_ring;
typedef struct commring_catalog commring_catalog;

COMMRING_API const char* commring_version(void);
COMMRING_API const char* commring_status_name(commring_status status);

/* Message for the last failed call on this thread; empty if none. */
COMMRING_API const char* commring_last_error(void);

/* Witness elements of the last axiom violation on this thread (-1 = unused). */
COMMRING_API void commring_last_axiom_witness(int64_t witness[3]);

COMMRING_API void commring_string_free(char* s);

/* add and mul are row-major order*order arrays. */
COMMRING_API commring_status commring_ring_from_tables(size_t order, const uint32_t* add,
                                                       const uint32_t* mul, const char* label,
                                                       commring_ring** out);

/* family: cyclic | zero | row_matrix | upper_triangular | full_matrix */
COMMRING_API commring_status commring_ring_family(const char* family, uint32_t parameter,
                                                  commring_ring** out);

/* Parses and validates a ring document. PARSE for malformed text, AXIOM for
 * tables that are not a ring. */
COMMRING_API commring_status commring_ring_parse(const char* text, size_t length,
                                                 commring_ring** out);
COMMRING_API commring_status commring_ring_load(const char* path, commring_ring** out);

COMMRING_API commring_status commring_ring_to_text(const commring_ring* ring, char** out);
COMMRING_API commring_status commring_ring_save(const commring_ring* ring, const char* path);

COMMRING_API size_t commring_ring_order(const commring_ring* ring);
COMMRING_API const char* commring_ring_label(const commring_ring* ring);
/* Digest of the document the ring was read from (or of its canonical text). */
COMMRING_API const char* commring_ring_digest(const commring_ring* ring);
COMMRING_API int commring_ring_is_commutative(const commring_ring* ring);

COMMRING_API void commring_ring_free(commring_ring* ring);

/* Full analysis plus every theorem check, as canonical JSON. fail_count may be NULL. */
COMMRING_API commring_status commring_analyze(const commring_ring* ring, size_t char_poly_cap,
                                              char** report_json, size_t* fail_count);

/* Tab-separated "label\tclaim\tverdict" lines for every theorem check. */
COMMRING_API commring_status commring_verify(const commring_ring* ring, size_t char_poly_cap,
                                             char** report_json, char** summary_lines,
                                             size_t* fail_count);

/* Enumerates associative structure-constant rings on (Z_p)^k. */
COMMRING_API commring_status commring_catalog_open(uint32_t p, uint32_t k, int noncommutative_only,
                                                   int allow_large, commring_catalog** out);
/* COMMRING_OK with a new ring in *out, or COMMRING_DONE. */
COMMRING_API commring_status commring_catalog_next(commring_catalog* catalog, commring_ring** out);
COMMRING_API void commring_catalog_stats(const commring_catalog* catalog, uint64_t* scanned,
                                         uint64_t* associative, uint64_t* kept);
COMMRING_API void commring_catalog_free(commring_catalog* catalog);

#ifdef __cplusplus
}
#endif

#endif /* COMMRING_H */
