#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hqc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Independent per-trial stream: results do not depend on how trials are
/// distributed over threads.
inline std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
    return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ trial_index));
}

/// Positions of iid Bernoulli(p) successes among n slots, via geometric
/// skips.
inline std::vector<std::size_t> sample_flips(std::mt19937_64& rng, std::size_t n, double p) {
    std::vector<std::size_t> out;
    if (p <= 0.0 || n == 0) return out;
    if (p >= 1.0) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(i);
        return out;
    }
    std::geometric_distribution<std::size_t> skip(p);
    std::size_t i = skip(rng);
    while (i < n) {
        out.push_back(i);
        i += 1 + skip(rng);
    }
    return out;
}

}  // namespace hqc
