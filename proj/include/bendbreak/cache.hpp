#pragma once

// Memoization substrate shared by all count families, with optional JSON
// persistence. Values are arbitrary-precision and serialized as decimal
// strings (counts overflow doubles and 2^53-limited JSON numbers).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bendbreak/engine.hpp"
#include "bendbreak/errors.hpp"

namespace bendbreak {

// Canonical identifier of a count: a kind tag plus its parameters.
// Printing then parsing is the identity.
struct CountKey {
    std::string kind;
    std::vector<std::string> params;

    std::string str() const {
        std::string s = kind;
        for (const auto& p : params) {
            s += ':';
            s += p;
        }
        return s;
    }

    static CountKey parse(const std::string& s) {
        CountKey k;
        std::size_t pos = s.find(':');
        if (pos == std::string::npos) {
            k.kind = s;
            return k;
        }
        k.kind = s.substr(0, pos);
        std::size_t start = pos + 1;
        while (true) {
            std::size_t next = s.find(':', start);
            if (next == std::string::npos) {
                k.params.push_back(s.substr(start));
                break;
            }
            k.params.push_back(s.substr(start, next - start));
            start = next + 1;
        }
        return k;
    }
};

inline CountKey make_key(std::string kind, std::initializer_list<std::string> params) {
    CountKey k;
    k.kind = std::move(kind);
    k.params.assign(params);
    return k;
}

// Key -> exact integer store. A key, once bound, is never rebound to a
// different value; concurrent lookups of one key all observe one value.
class CountCache {
public:
    CountCache() = default;

    Integer get_or_compute(const CountKey& key, const std::function<Integer()>& producer) {
        const std::string ks = key.str();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(ks);
            if (it != map_.end()) return it->second;
        }
        Integer value = producer();  // errors propagate, nothing cached
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.emplace(ks, value);
        if (!inserted && it->second != value)
            throw Error("cache key rebound with a different value: " + ks);
        return it->second;
    }

    bool lookup(const CountKey& key, Integer& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key.str());
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }

    void insert(const CountKey& key, const Integer& value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.emplace(key.str(), value);
        if (!inserted && it->second != value)
            throw Error("cache key rebound with a different value: " + key.str());
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

    std::map<std::string, Integer> snapshot() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_;
    }

    // JSON object with keys in sorted order; written via temp file + rename.
    void save(const std::string& path) const {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        {
            std::lock_guard<std::mutex> lock(mu_);
            for (const auto& [k, v] : map_) j[k] = to_decimal(v);
        }
        namespace fs = std::filesystem;
        fs::path target(path);
        fs::path dir = target.parent_path();
        fs::path tmp = (dir.empty() ? fs::path(".") : dir) /
                       (target.filename().string() + ".tmp");
        {
            std::ofstream out(tmp);
            if (!out) throw Error("cannot write cache file: " + tmp.string());
            out << j.dump(2) << '\n';
        }
        fs::rename(tmp, target);
    }

    static CountCache load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot read cache file: " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("bad cache file " + path + ": " + e.what());
        }
        if (!j.is_object()) throw ParseError("cache file must hold a JSON object");
        CountCache c;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!it.value().is_string())
                throw ParseError("cache values must be decimal strings");
            c.map_.emplace(it.key(), integer_from_decimal(it.value().get<std::string>()));
        }
        return c;
    }

private:
    mutable std::mutex mu_;
    std::map<std::string, Integer> map_;
};

}  // namespace bendbreak
