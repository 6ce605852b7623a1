#ifndef SCHOLL_H
#define SCHOLL_H

/* C interface to the scholl library. Operations take a JSON object of
 * arguments and return a JSON document; strings returned through out
 * parameters are owned by the caller and released with scholl_free_string. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SCHOLL_BUILDING)
#define SCHOLL_API __attribute__((visibility("default")))
#else
#define SCHOLL_API
#endif

typedef struct scholl_ctx scholl_ctx;

typedef enum {
    SCHOLL_OK = 0,
    SCHOLL_E_DOMAIN = 1,      /* input outside the operation's domain */
    SCHOLL_E_CAPACITY = 2,    /* beyond table sizes or series precision */
    SCHOLL_E_CONSISTENCY = 3, /* a mathematical identity failed to hold */
    SCHOLL_E_PRECISION = 4,   /* floating rounding margin too small */
    SCHOLL_E_USAGE = 5,       /* malformed arguments or unknown operation */
    SCHOLL_E_IO = 6,
    SCHOLL_E_INTERNAL = 7
} scholl_status;

SCHOLL_API const char* scholl_version(void);

SCHOLL_API scholl_ctx* scholl_ctx_new(void);
SCHOLL_API void scholl_ctx_free(scholl_ctx* ctx);

/* Enables the result cache in dir (NULL or "" disables it). With verify
 * set, cache hits are recomputed and a mismatch fails with
 * SCHOLL_E_CONSISTENCY. */
SCHOLL_API scholl_status scholl_ctx_set_cache(scholl_ctx* ctx, const char* dir, int verify);

/* Whether the last scholl_run was answered from the cache. */
SCHOLL_API int scholl_ctx_last_cached(const scholl_ctx* ctx);

/* Message for the last failure on ctx; empty after success. Owned by ctx. */
SCHOLL_API const char* scholl_last_error(const scholl_ctx* ctx);

/* JSON array of operation names. */
SCHOLL_API scholl_status scholl_list_operations(char** out_json);

/* Runs op with args_json (an object, NULL means {}) and stores the result
 * document in *out_json. Results of checking operations contain "ok". */
SCHOLL_API scholl_status scholl_run(scholl_ctx* ctx, const char* op, const char* args_json, char** out_json);

/* Convenience wrappers over scholl_run. */
SCHOLL_API scholl_status scholl_trace(scholl_ctx* ctx, int n, int i, unsigned long p, const char* method, char** out_json);
SCHOLL_API scholl_status scholl_asd_solve(scholl_ctx* ctx, unsigned long p, char** out_json);

SCHOLL_API void scholl_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
