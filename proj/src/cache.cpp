#include "cache.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

namespace scholl {

std::string cache_key(const std::string& op, const json& args) {
    std::string s = op + "\n" + args.dump() + "\n" + kArtifactVersion;
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

ResultCache::ResultCache(std::string dir, bool verify) : dir_(std::move(dir)), verify_(verify) {
    if (dir_.empty()) return;
    ::mkdir(dir_.c_str(), 0755);
    if (::access(dir_.c_str(), W_OK) != 0) {
        std::cerr << "warning: cache directory " << dir_ << " is not writable; continuing without cache\n";
        dir_.clear();
    }
}

bool ResultCache::lookup(const std::string& key, json& value) const {
    std::ifstream in(file());
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json e = json::parse(line, nullptr, false);
        if (e.is_discarded() || !e.is_object() || !e.contains("key") || !e.contains("value")) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << "\n";
            continue;
        }
        if (e["key"] == key) {
            value = e["value"];
            return true;
        }
    }
    return false;
}

void ResultCache::append(const std::string& key, const std::string& op, const json& args, const json& value) {
    char ts[32];
    std::time_t now = std::time(nullptr);
    std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    json e = {{"key", key}, {"op", op}, {"args", args}, {"value", value}, {"created", ts}};
    std::string line = e.dump() + "\n";
    int fd = ::open(file().c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) {
        std::cerr << "warning: cannot append to " << file() << "\n";
        return;
    }
    ::flock(fd, LOCK_EX);
    ssize_t w = ::write(fd, line.data(), line.size());
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (w != (ssize_t)line.size()) std::cerr << "warning: short write to " << file() << "\n";
}

json ResultCache::get_or_compute(const std::string& op, const json& args, const std::function<json()>& compute, bool* hit) {
    if (hit) *hit = false;
    if (!enabled()) return compute();
    std::string key = cache_key(op, args);
    json cached;
    if (lookup(key, cached)) {
        if (hit) *hit = true;
        if (verify_) {
            json fresh = compute();
            if (fresh.dump() != cached.dump())
                throw Error(Error::Consistency, "cache entry " + key + " differs from recomputation");
        }
        return cached;
    }
    json v = compute();
    append(key, op, args, v);
    return v;
}

}  // namespace scholl
