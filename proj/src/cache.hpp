#pragma once
// Append-only JSON-lines result cache keyed by a hash of (operation,
// canonical arguments, artifact version).

#include <functional>
#include <string>

#include "report.hpp"

namespace scholl {

std::string cache_key(const std::string& op, const json& args);

class ResultCache {
public:
    // An empty directory disables caching.
    explicit ResultCache(std::string dir = "", bool verify = false);

    bool enabled() const { return !dir_.empty(); }
    // In verify mode every hit is recomputed and must match byte for byte.
    json get_or_compute(const std::string& op, const json& args, const std::function<json()>& compute, bool* hit = nullptr);

private:
    bool lookup(const std::string& key, json& value) const;
    void append(const std::string& key, const std::string& op, const json& args, const json& value);
    std::string file() const { return dir_ + "/results.jsonl"; }

    std::string dir_;
    bool verify_;
};

}  // namespace scholl
