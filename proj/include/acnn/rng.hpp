#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Deterministic randomness helpers. std::mt19937_64 output is fully
// specified by the standard, but the std distributions are not, so every
// draw below is built from raw engine output. Same seed, same bytes,
// on every platform.

namespace acnn::rng {

using Engine = std::mt19937_64;

// Decorrelates (seed, stream) pairs before feeding the engine, so
// per-sample / per-epoch streams don't overlap trivially.
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return Engine(mix(mix(seed) ^ mix(stream * 0x632be59bd9b4e019ULL + 1)));
}

// Uniform in [0, 1), 53 random bits.
inline double uniform(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& g, double lo, double hi) {
    return lo + (hi - lo) * uniform(g);
}

// Uniform integer in [0, n). Multiply-shift map; bias is < n / 2^64.
inline std::uint64_t uniform_int(Engine& g, std::uint64_t n) {
    const auto wide = static_cast<unsigned __int128>(g()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

// Fisher-Yates with the deterministic draws above.
template <typename T>
void shuffle(std::vector<T>& v, Engine& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_int(g, i)]);
    }
}

inline std::vector<std::size_t> permutation(std::size_t n, Engine& g) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    shuffle(idx, g);
    return idx;
}

}  // namespace acnn::rng
