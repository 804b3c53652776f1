#ifndef SEAWEED_C_H
#define SEAWEED_C_H

#include <stdint.h>

#if defined(_WIN32)
#define SW_API __declspec(dllexport)
#else
#define SW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes returned by every function that can fail. */
enum {
    SW_OK = 0,
    SW_ERR_PARSE = 1,
    SW_ERR_VALIDATION = 2,
    SW_ERR_UNSUPPORTED = 3,
    SW_ERR_INTERNAL = 4,
    SW_ERR_ARGUMENT = 5
};

typedef struct sw_spec sw_spec;
typedef struct sw_functional sw_functional;

/* Message for the most recent failure on the calling thread. */
SW_API const char* sw_last_error(void);

/* Releases strings returned through char** out-parameters. */
SW_API void sw_string_free(char* s);

/* Spec text such as "gl 17|3 / 10|4|6" or "C 5|10 / 2|4|3|1|1".
   rank = 0 picks the default rank for the family. */
SW_API int sw_spec_parse(const char* text, int rank, sw_spec** out);
SW_API int sw_spec_from_json(const char* json, sw_spec** out);
SW_API void sw_spec_free(sw_spec* spec);
SW_API int sw_spec_json(const sw_spec* spec, char** out);
SW_API int sw_spec_text(const sw_spec* spec, char** out);
SW_API int sw_spec_size(const sw_spec* spec, int* out);

SW_API int sw_index(const sw_spec* spec, int* out);
SW_API int sw_meander_json(const sw_spec* spec, char** out);
SW_API int sw_meander_dot(const sw_spec* spec, char** out);
SW_API int sw_meander_ascii(const sw_spec* spec, char** out);
SW_API int sw_signature(const sw_spec* spec, char** out);
SW_API int sw_signature_json(const sw_spec* spec, char** out);
SW_API int sw_homotopy(const sw_spec* spec, char** out);
SW_API int sw_core_json(const sw_spec* spec, char** out);
SW_API int sw_core_ascii(const sw_spec* spec, char** out);

/* base: F G H K Gp Hp Kp Fp (NULL means F).
   peaks: "diag", "anti" or "mixed:I-J=diag,..." (NULL means diag). */
SW_API int sw_construct(const sw_spec* spec, const char* base, const char* peaks, sw_functional** out);
SW_API int sw_functional_from_json(const char* json, sw_functional** out);
SW_API void sw_functional_free(sw_functional* f);
SW_API int sw_functional_json(const sw_functional* f, char** out);
SW_API int sw_functional_ascii(const sw_functional* f, char** out);
SW_API int sw_functional_size(const sw_functional* f, int* out);

SW_API int sw_kernel_dim(const sw_spec* spec, const sw_functional* f, int* out);
SW_API int sw_relations_json(const sw_spec* spec, const sw_functional* f, char** out);
SW_API int sw_relations_text(const sw_spec* spec, const sw_functional* f, char** out);
/* JSON object: regular, kernel_dim, index, relations_verified, blocks,
   blocks_ok, problems. */
SW_API int sw_verify_json(const sw_spec* spec, const sw_functional* f, char** out);

SW_API int sw_oracle(const sw_spec* spec, int samples, uint64_t seed, int* out);

/* family: gl A B C. log_path may be NULL. budget = 0 means no limit.
   The report is a JSON object with counts and a failures array. */
SW_API int sw_enumerate(const char* family, int max_n, const char* peaks, int samples, uint64_t seed,
                        int canonical, long budget, const char* log_path, char** out);

/* JSON object with ok and failures. */
SW_API int sw_closed_form_check(int n, char** out);

#ifdef __cplusplus
}
#endif

#endif
