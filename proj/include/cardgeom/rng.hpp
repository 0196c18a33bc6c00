#pragma once

// Pinned pseudo-random stream so that shuffles, samples, and Monte Carlo
// estimates are bit-identical across platforms and implementations:
// a 64-bit seed expands to xoshiro256** state through SplitMix64, bounded
// draws take next() modulo the bound, and shuffles are descending
// Fisher-Yates. The exact procedure is documented in the README.

#include <cstdint>
#include <numeric>
#include <vector>

namespace cardgeom {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform-enough draw in [0, bound); plain modulo, by specification.
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

/// Descending Fisher-Yates with j = bounded(i + 1).
template <typename T>
void shuffle(std::vector<T>& values, Xoshiro256ss& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.bounded(i));
        std::swap(values[i - 1], values[j]);
    }
}

/// First k entries of a shuffled 0..n-1, in draw order.
inline std::vector<int> sample_without_replacement(int n, int k, Xoshiro256ss& rng) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        size_t j = i + static_cast<size_t>(rng.bounded(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<size_t>(i)], pool[j]);
        out.push_back(pool[static_cast<size_t>(i)]);
    }
    return out;
}

} // namespace cardgeom
