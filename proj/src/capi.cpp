#include "scholl/scholl.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include "cache.hpp"

struct scholl_ctx {
    std::unique_ptr<scholl::ResultCache> cache = std::make_unique<scholl::ResultCache>();
    std::string error;
    bool cached = false;
};

namespace {

char* dup_string(const std::string& s) {
    char* r = static_cast<char*>(std::malloc(s.size() + 1));
    if (r) std::memcpy(r, s.c_str(), s.size() + 1);
    return r;
}

scholl_status status_of(scholl::Error::Kind k) {
    switch (k) {
        case scholl::Error::Domain: return SCHOLL_E_DOMAIN;
        case scholl::Error::Capacity: return SCHOLL_E_CAPACITY;
        case scholl::Error::Consistency: return SCHOLL_E_CONSISTENCY;
        case scholl::Error::Precision: return SCHOLL_E_PRECISION;
        case scholl::Error::Usage: return SCHOLL_E_USAGE;
        case scholl::Error::Io: return SCHOLL_E_IO;
    }
    return SCHOLL_E_INTERNAL;
}

template <class F>
scholl_status guarded(scholl_ctx* ctx, F&& f) {
    if (ctx) ctx->error.clear();
    try {
        f();
        return SCHOLL_OK;
    } catch (const scholl::Error& e) {
        if (ctx) ctx->error = e.what();
        return status_of(e.kind);
    } catch (const nlohmann::json::exception& e) {
        if (ctx) ctx->error = e.what();
        return SCHOLL_E_USAGE;
    } catch (const std::exception& e) {
        if (ctx) ctx->error = e.what();
        return SCHOLL_E_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* scholl_version(void) { return scholl::kArtifactVersion; }

scholl_ctx* scholl_ctx_new(void) {
    try {
        return new scholl_ctx;
    } catch (...) {
        return nullptr;
    }
}

void scholl_ctx_free(scholl_ctx* ctx) { delete ctx; }

scholl_status scholl_ctx_set_cache(scholl_ctx* ctx, const char* dir, int verify) {
    if (!ctx) return SCHOLL_E_USAGE;
    return guarded(ctx, [&] { ctx->cache = std::make_unique<scholl::ResultCache>(dir ? dir : "", verify != 0); });
}

int scholl_ctx_last_cached(const scholl_ctx* ctx) { return ctx && ctx->cached; }

const char* scholl_last_error(const scholl_ctx* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

scholl_status scholl_list_operations(char** out_json) {
    if (!out_json) return SCHOLL_E_USAGE;
    *out_json = dup_string(scholl::json(scholl::operation_names()).dump());
    return *out_json ? SCHOLL_OK : SCHOLL_E_INTERNAL;
}

scholl_status scholl_run(scholl_ctx* ctx, const char* op, const char* args_json, char** out_json) {
    if (!ctx || !op || !out_json) return SCHOLL_E_USAGE;
    *out_json = nullptr;
    ctx->cached = false;
    return guarded(ctx, [&] {
        scholl::json args = args_json && *args_json ? scholl::json::parse(args_json) : scholl::json::object();
        std::string name = op;
        bool hit = false;
        scholl::json r = ctx->cache->get_or_compute(name, args, [&] { return scholl::run_operation(name, args); }, &hit);
        ctx->cached = hit;
        *out_json = dup_string(r.dump());
        if (!*out_json) throw std::bad_alloc();
    });
}

scholl_status scholl_trace(scholl_ctx* ctx, int n, int i, unsigned long p, const char* method, char** out_json) {
    scholl::json a = {{"n", n}, {"i", i}, {"p", p}, {"method", method ? method : "auto"}};
    return scholl_run(ctx, "trace", a.dump().c_str(), out_json);
}

scholl_status scholl_asd_solve(scholl_ctx* ctx, unsigned long p, char** out_json) {
    scholl::json a = {{"p", p}};
    return scholl_run(ctx, "asd-solve", a.dump().c_str(), out_json);
}

void scholl_free_string(char* s) { std::free(s); }

}  // extern "C"
