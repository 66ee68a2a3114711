#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace promptforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad flags, bad config files, violated preconditions. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent data files and records. CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

// Transport, auth, rate-limit exhaustion, unparseable wire responses. CLI exit code 3.
class BackendError : public Error {
public:
    using Error::Error;
};

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

// FNV-1a, used wherever a stable cross-run hash is needed (request digests,
// config digests, nonce derivation). std::hash is not stable across builds.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = kFnvOffset) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a_u64(std::uint64_t v, std::uint64_t h = kFnvOffset) {
    for (int i = 0; i < 8; ++i) {
        h ^= static_cast<unsigned char>(v >> (8 * i));
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    return splitmix64(a ^ splitmix64(b ^ splitmix64(c)));
}

// Deterministic generator with a platform-independent stream. Everything
// seeded in this project (splits, shuffles, mock coins) goes through this so
// runs reproduce bit-for-bit regardless of standard library internals.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ull);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Modulo bias is < 2^-57 for the small bounds used here.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Fisher-Yates with the deterministic generator above.
template <typename T>
void shuffle_in_place(std::vector<T>& v, SplitMix& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.below(i)]);
    }
}

// Canonical choice labels are positional: index 0 -> 'A', 1 -> 'B', ...
inline char label_for(std::size_t index) {
    if (index >= 26) {
        throw DataError("choice index " + std::to_string(index) + " has no single-letter label");
    }
    return static_cast<char>('A' + index);
}

inline int label_index(char label) {
    if (label < 'A' || label > 'Z') {
        throw DataError(std::string("not a choice label: '") + label + "'");
    }
    return label - 'A';
}

inline std::vector<char> labels_for(std::size_t n) {
    std::vector<char> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(label_for(i));
    return out;
}

std::string to_hex(std::uint64_t v);

}  // namespace promptforge
