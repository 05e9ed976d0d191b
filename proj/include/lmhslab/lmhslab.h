/* C interface to the lmhslab exact-arithmetic library.
 *
 * Every function returns an lmhs_status. On failure the output pointer is
 * left untouched and lmhs_last_error() describes the problem (the message
 * is thread-local and valid until the next call on the same thread).
 * Reports are NUL-terminated UTF-8 strings owned by an lmhs_report handle.
 */
#ifndef LMHSLAB_H
#define LMHSLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(LMHSLAB_BUILDING_LIBRARY)
#define LMHS_API __attribute__((visibility("default")))
#else
#define LMHS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lmhs_status {
  LMHS_OK = 0,
  LMHS_USAGE = 1,    /* bad arguments to the API itself */
  LMHS_INPUT = 2,    /* malformed or out-of-range input data */
  LMHS_INTERNAL = 3  /* failed internal consistency check */
} lmhs_status;

typedef enum lmhs_format { LMHS_FORMAT_JSON = 0, LMHS_FORMAT_TEXT = 1, LMHS_FORMAT_DOT = 2 } lmhs_format;

typedef enum lmhs_log_mode { LMHS_LOG_STANDARD = 0, LMHS_LOG_PAPER = 1 } lmhs_log_mode;

typedef struct lmhs_lattice lmhs_lattice;
typedef struct lmhs_report lmhs_report;

LMHS_API const char* lmhs_version(void);
LMHS_API const char* lmhs_last_error(void);
/* 0 restores the default (hardware concurrency). */
LMHS_API void lmhs_set_thread_limit(unsigned n);

LMHS_API const char* lmhs_report_text(const lmhs_report* report);
LMHS_API size_t lmhs_report_size(const lmhs_report* report);
LMHS_API void lmhs_report_free(lmhs_report* report);

/* Lattice spec, e.g. "U+E8m^2+A1m". */
LMHS_API lmhs_status lmhs_lattice_parse(const char* spec, lmhs_lattice** out);
LMHS_API void lmhs_lattice_free(lmhs_lattice* lattice);
LMHS_API lmhs_status lmhs_lattice_rank(const lmhs_lattice* lattice, size_t* out);
LMHS_API lmhs_status lmhs_lattice_inner(const lmhs_lattice* lattice, const int64_t* v, const int64_t* w, size_t n,
                                        int64_t* out);
LMHS_API lmhs_status lmhs_lattice_info(const lmhs_lattice* lattice, lmhs_format format, lmhs_report** out);

/* cycles_text: optional lattice spec line, then one vector per line.
 * lattice may be NULL when the text names its lattice. */
LMHS_API lmhs_status lmhs_monodromy_analyze(const lmhs_lattice* lattice, const char* cycles_text,
                                            lmhs_log_mode mode, unsigned base_change_bound, unsigned rho_initial,
                                            lmhs_format format, lmhs_report** out);

LMHS_API lmhs_status lmhs_quartic_verify(const char* poly_text, const char* point_text, lmhs_format format,
                                         lmhs_report** out);
LMHS_API lmhs_status lmhs_quartic_scan(const char* poly_text, int64_t height_bound, lmhs_format format,
                                       lmhs_report** out);
/* family_text: tagged "f0: ..." / "g: ... [; lambda=q]" lines.
 * t_list: comma-separated rationals (may be empty). */
LMHS_API lmhs_status lmhs_quartic_family(const char* family_text, const char* t_list, int64_t height_bound,
                                         lmhs_format format, lmhs_report** out);

LMHS_API lmhs_status lmhs_wpr_graph(unsigned rho_max, unsigned k_max, lmhs_format format, lmhs_report** out);
/* attach_lattice may be NULL (no cycle attachment). */
LMHS_API lmhs_status lmhs_wpr_plan(unsigned target_rank, const lmhs_lattice* attach_lattice, int64_t height_bound,
                                   lmhs_format format, lmhs_report** out);

/* only_ids: comma-separated claim ids or NULL for all. */
LMHS_API lmhs_status lmhs_claims_audit(const char* only_ids, int isotropic_variant, int64_t height_bound,
                                       lmhs_format format, lmhs_report** out);

#ifdef __cplusplus
}
#endif

#endif /* LMHSLAB_H */
