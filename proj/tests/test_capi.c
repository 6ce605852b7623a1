/* Plain C client of the shared library. */
#include <stdio.h>
#include <string.h>

#include <scholl/scholl.h>

static int failures = 0;

#define EXPECT(cond)                                                     \
    do {                                                                 \
        if (!(cond)) {                                                   \
            fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, \
                    __LINE__, #cond);                                    \
            ++failures;                                                  \
        }                                                                \
    } while (0)

int main(void) {
    char* out = NULL;
    scholl_ctx* ctx = scholl_ctx_new();
    EXPECT(ctx != NULL);
    EXPECT(strlen(scholl_version()) > 0);

    EXPECT(scholl_trace(ctx, 2, 1, 5, "both", &out) == SCHOLL_OK);
    EXPECT(out && strstr(out, "\"text\":\"-6\"") != NULL);
    scholl_free_string(out);
    out = NULL;

    EXPECT(scholl_run(ctx, "induce", "{\"n\":2,\"p\":5}", &out) == SCHOLL_OK);
    EXPECT(out && strstr(out, "x^2 + 6x + 25") != NULL);
    scholl_free_string(out);
    out = NULL;

    EXPECT(scholl_run(ctx, "no-such-op", "{}", &out) == SCHOLL_E_USAGE);
    EXPECT(out == NULL);
    EXPECT(strlen(scholl_last_error(ctx)) > 0);
    EXPECT(scholl_run(ctx, "trace", "{not json", &out) == SCHOLL_E_USAGE);
    EXPECT(scholl_run(ctx, "trace", "{\"n\":2,\"i\":1,\"p\":9}", &out) == SCHOLL_E_DOMAIN);

    EXPECT(scholl_list_operations(&out) == SCHOLL_OK);
    EXPECT(out && strstr(out, "asd-solve") != NULL);
    scholl_free_string(out);

    scholl_ctx_free(ctx);
    if (failures) return 1;
    printf("c api: all checks passed\n");
    return 0;
}
