#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lakehopper {

// FNV-1a. Used for feature hashing and seed derivation; stable across
// platforms, unlike std::hash.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 14695981039346656037ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 14695981039346656037ull) {
    return fnv1a64(s.data(), s.size(), h);
}

// Derives an independent RNG seed for a named stream of a run. Keeps the
// consumption of one stream from shifting any other.
inline uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index = 0) {
    uint64_t h = fnv1a64(&base, sizeof(base));
    h = fnv1a64(tag, h);
    h = fnv1a64(&index, sizeof(index), h);
    return h;
}

inline std::mt19937_64 make_rng(uint64_t base, std::string_view tag, uint64_t index = 0) {
    return std::mt19937_64(derive_seed(base, tag, index));
}

// Sample `count` items without replacement from `pool`; pool order is not
// consumed. Returns all of pool when count >= pool size.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, size_t count, std::mt19937_64& rng) {
    if (count >= pool.size()) {
        std::shuffle(pool.begin(), pool.end(), rng);
        return pool;
    }
    // partial Fisher-Yates: only the first `count` positions are needed
    for (size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(count);
    return pool;
}

inline std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace lakehopper
