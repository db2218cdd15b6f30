/* C API for the hopfq exact-arithmetic verification library.
 *
 * All functions are thread-compatible: distinct sessions may be used from
 * distinct threads concurrently; a single session must not be shared without
 * external synchronization. Strings returned by accessors stay valid until
 * the owning object is destroyed or the next failing call on the session.
 */
#ifndef HOPFQ_H
#define HOPFQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hopfq_status {
    HOPFQ_OK = 0,            /* command ran, every check passed          */
    HOPFQ_CHECK_FAILED = 1,  /* command ran, at least one check failed   */
    HOPFQ_ERR_INPUT = 2,     /* parse error, bad reference or dimensions */
    HOPFQ_ERR_USAGE = 3,     /* bad arguments (null pointers, no file)   */
    HOPFQ_ERR_INTERNAL = 4
} hopfq_status;

typedef struct hopfq_session hopfq_session;
typedef struct hopfq_report hopfq_report;

const char* hopfq_version(void);

hopfq_session* hopfq_session_create(void);
void hopfq_session_destroy(hopfq_session* session);

/* Loads a structure file; max_dim > 0 caps the admissible dimensions.
 * Replaces any previously loaded document on success. */
hopfq_status hopfq_load_file(hopfq_session* session, const char* path, long max_dim);
hopfq_status hopfq_load_string(hopfq_session* session, const char* text, long max_dim);

/* Human-readable message for the last failing call on this session. */
const char* hopfq_last_error(const hopfq_session* session);

/* Runs a suite (whq | hopf-quasigroup | comodule-magma | anchor | module |
 * lemma22 | identities), the coinvariants-isomorphism certification, or the
 * categorical-equivalence certification. On HOPFQ_OK / HOPFQ_CHECK_FAILED a
 * report is stored in *out (caller owns it). */
hopfq_status hopfq_run_verify(hopfq_session* session, const char* suite, hopfq_report** out);
hopfq_status hopfq_run_fundamental(hopfq_session* session, hopfq_report** out);
hopfq_status hopfq_run_equivalence(hopfq_session* session, hopfq_report** out);

int hopfq_report_passed(const hopfq_report* report);
const char* hopfq_report_text(const hopfq_report* report);
const char* hopfq_report_json(const hopfq_report* report); /* schema hopfq.report/v1 */
void hopfq_report_destroy(hopfq_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HOPFQ_H */
