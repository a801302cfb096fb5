#ifndef LLC_LLC_H
#define LLC_LLC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LLC_API __declspec(dllexport)
#else
#define LLC_API __attribute__((visibility("default")))
#endif

/* Every call returns one of these.  On failure llc_last_error() holds the message. */
typedef enum llc_status {
    LLC_OK = 0,
    LLC_INVALID_OPERAND = 1,
    LLC_EVALUATION_POLE = 2,
    LLC_LABEL_GROUP_MISMATCH = 3,
    LLC_UNSUPPORTED = 4,
    LLC_INCOMPLETE_DATA = 5,
    LLC_INVALID_DATUM = 6,
    LLC_NEEDS_DECLARATION = 7,
    LLC_NOT_APPLICABLE = 8,
    LLC_MALFORMED_DESCRIPTOR = 9,
    LLC_INVALID_ENHANCEMENT = 10,
    LLC_NULL_ARGUMENT = 100,
    LLC_INTERNAL = 101
} llc_status;

typedef struct llc_context llc_context;       /* owns result strings and the last error */
typedef struct llc_descriptor llc_descriptor; /* a parsed L-parameter descriptor */
typedef struct llc_qhalf llc_qhalf;           /* an element of Q(q^{1/2}) */

typedef enum llc_qop { LLC_QADD = 0, LLC_QSUB = 1, LLC_QMUL = 2, LLC_QDIV = 3 } llc_qop;

LLC_API const char* llc_version(void);
LLC_API const char* llc_status_name(llc_status s);

LLC_API llc_status llc_context_new(llc_context** out);
LLC_API void llc_context_free(llc_context* ctx);
LLC_API const char* llc_last_error(const llc_context* ctx);

/* Strings written to `out` belong to the context and stay valid until its next call. */

/* name: root_datum, weyl, orbits, levis, parahoric, facets, finite, depth_zero, types, tori,
   springer, presets */
LLC_API llc_status llc_tables(llc_context* ctx, const char* group, const char* name, const char** out);

LLC_API llc_status llc_descriptor_parse(llc_context* ctx, const char* json, llc_descriptor** out);
LLC_API llc_status llc_descriptor_preset(llc_context* ctx, const char* name, llc_descriptor** out);
LLC_API void llc_descriptor_free(llc_descriptor* d);
LLC_API llc_status llc_descriptor_json(llc_context* ctx, const llc_descriptor* d, const char** out);

LLC_API llc_status llc_centralizer(llc_context* ctx, const llc_descriptor* d, const char** out);
/* {"schema", "centralizer", "packet"} */
LLC_API llc_status llc_packet(llc_context* ctx, const llc_descriptor* d, const char** out);
LLC_API llc_status llc_infinitesimal(llc_context* ctx, const llc_descriptor* d, const char** out);
LLC_API llc_status llc_cuspidal_support(llc_context* ctx, const llc_descriptor* d, const char* rho, const char** out);
LLC_API llc_status llc_restrict_to_sp4(llc_context* ctx, const llc_descriptor* d, const char** out);

/* Induced representation in the JSON form documented in the README. */
LLC_API llc_status llc_reduce(llc_context* ctx, const char* induced_json, const char** out);

/* rep: a depth-zero key of the group, or delta_eta2 on GSp4.  q0 <= 0 skips evaluation. */
LLC_API llc_status llc_fdeg(llc_context* ctx, const char* group, const char* rep, long q0, const char** out);

LLC_API llc_status llc_stability(llc_context* ctx, const char* candidates_json, const char** out);

/* failures may be NULL */
LLC_API llc_status llc_selfcheck(llc_context* ctx, int samples, const char** out, int* failures);

LLC_API llc_status llc_qhalf_parse(llc_context* ctx, const char* text, llc_qhalf** out);
LLC_API void llc_qhalf_free(llc_qhalf* x);
LLC_API llc_status llc_qhalf_arith(llc_context* ctx, const llc_qhalf* a, const llc_qhalf* b, llc_qop op,
                                   llc_qhalf** out);
LLC_API llc_status llc_qhalf_str(llc_context* ctx, const llc_qhalf* x, const char** out);
LLC_API llc_status llc_qhalf_factored(llc_context* ctx, const llc_qhalf* x, const char** out);
LLC_API llc_status llc_qhalf_eval(llc_context* ctx, const llc_qhalf* x, long q0, const char** out);
LLC_API int llc_qhalf_equal(const llc_qhalf* a, const llc_qhalf* b);

#ifdef __cplusplus
}
#endif

#endif
