#pragma once
#include <cstdint>
#include <random>

namespace phasecd {

// Seeded generator with a platform-independent bit stream. The raw mt19937_64
// output is pinned by the standard; the [0,1) and index mappings below are our
// own so results never depend on the library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    std::uint64_t uniform_index(std::uint64_t m) { return next_u64() % m; }

    // decorrelated seed for a numbered substream (multi-start, grid cells)
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}
