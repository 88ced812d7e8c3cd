/*
 * C interface to the hvt library: Hecke insertion, vacillating Hecke
 * tableaux, and linked partitions.
 *
 * Every domain object lives behind an opaque hvt_document handle created by
 * a parse/construct call and released with hvt_document_free. Functions
 * return an hvt_status; on failure hvt_last_error() describes the problem
 * for the calling thread. Strings returned through char** out-parameters are
 * owned by the caller and released with hvt_string_free.
 *
 * Document kinds: "partition", "tableau", "hecke-tableau", "word", "linked",
 * "blocks", "vht", "distribution", "report".
 */
#ifndef HVT_H
#define HVT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  define HVT_API __declspec(dllexport)
#else
#  define HVT_API __attribute__((visibility("default")))
#endif

typedef struct hvt_document hvt_document;

typedef enum hvt_status {
    HVT_OK = 0,
    HVT_ERR_PARSE = 1,
    HVT_ERR_VALIDATION = 2,
    HVT_ERR_SHAPE_MISMATCH = 3,
    HVT_ERR_PRECONDITION = 4,
    HVT_ERR_UNREACHABLE = 5,
    HVT_ERR_LIMIT = 6,
    HVT_ERR_INTERNAL = 7,
    HVT_ERR_ARGUMENT = 8, /* null pointer or wrong document kind */
} hvt_status;

/* Enumeration filters, combinable with bitwise or. */
enum {
    HVT_FILTER_NONCROSSING = 1,  /* crossing number at most 1 */
    HVT_FILTER_SETPARTITION = 2, /* front representations only */
};

/* Return nonzero to stop the enumeration early. The document is borrowed. */
typedef int (*hvt_visit_fn)(const hvt_document *doc, void *user);

HVT_API const char *hvt_version(void);
HVT_API const char *hvt_last_error(void);
HVT_API const char *hvt_status_name(hvt_status status);
HVT_API void hvt_string_free(char *s);

/* Documents */
HVT_API hvt_status hvt_document_parse(const char *kind, const char *text, hvt_document **out);
HVT_API hvt_status hvt_document_from_json(const char *json, hvt_document **out);
HVT_API hvt_document *hvt_document_clone(const hvt_document *doc);
HVT_API void hvt_document_free(hvt_document *doc);
HVT_API const char *hvt_document_kind(const hvt_document *doc);
HVT_API hvt_status hvt_document_to_text(const hvt_document *doc, char **out);
/* Compact JSON, one line. */
HVT_API hvt_status hvt_document_to_json(const hvt_document *doc, char **out);
HVT_API int hvt_document_equal(const hvt_document *a, const hvt_document *b);

/* Hecke insertion. `tableau` must be of kind "tableau". */
HVT_API hvt_status hvt_insert(const hvt_document *tableau, int x, hvt_document **out, int *corner_row,
                              int *corner_col, int *alpha);
HVT_API hvt_status hvt_reverse_insert(const hvt_document *tableau, int corner_row, int corner_col, int alpha,
                                      hvt_document **out, int *x);
/* Insertion tableau of a "word" plus longest increasing/decreasing subword lengths. */
HVT_API hvt_status hvt_word_tableau(const hvt_document *word, hvt_document **out, int *inc, int *dec);

/* Linked partitions ("linked" or "blocks" documents are accepted). */
HVT_API hvt_status hvt_to_blocks(const hvt_document *partition, hvt_document **out);
HVT_API hvt_status hvt_to_arcs(const hvt_document *partition, hvt_document **out);
HVT_API hvt_status hvt_crossing_nesting(const hvt_document *partition, int use_oracle, int *crossing, int *nesting);
/* Endpoint sets rendered as "{1,2,7}". */
HVT_API hvt_status hvt_endpoints(const hvt_document *partition, char **left, char **right, int *front);

/* Bijection with vacillating Hecke tableaux. */
HVT_API hvt_status hvt_to_linked(const hvt_document *vht, hvt_document **out);
HVT_API hvt_status hvt_to_vht(const hvt_document *partition, hvt_document **out);
/* Per-step trace of the map to linked partitions: one line per index with the
 * edge set, the Hecke tableau and the word of the proof trace. With
 * `structured` nonzero, a JSON array instead. */
HVT_API hvt_status hvt_phi_trace(const hvt_document *vht, int structured, char **out);
HVT_API hvt_status hvt_vht_extrema(const hvt_document *vht, int *rows, int *cols);
/* Conjugation: "linked"/"blocks" -> the involution psi (as "linked"),
 * "partition" -> transposed diagram, "vht" -> transposed tableau. */
HVT_API hvt_status hvt_conjugate(const hvt_document *doc, hvt_document **out);

/* Statistics. `left`/`right` are endpoint-set texts; pass both NULL for the
 * unrestricted distribution. */
HVT_API hvt_status hvt_stats(int n, const char *left, const char *right, hvt_document **out, int *symmetric);
/* kind: "linked", "blocks" or "vht". Restriction sets as in hvt_stats. */
HVT_API hvt_status hvt_enumerate(const char *kind, int n, unsigned filters, const char *left, const char *right,
                                 hvt_visit_fn visit, void *user);
HVT_API hvt_status hvt_verify(int n, hvt_document **report, int *passed);

#ifdef __cplusplus
}
#endif

#endif /* HVT_H */
