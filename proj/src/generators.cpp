#include "phasecd/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace phasecd {

static PhaseSequence from_raw_phases(std::vector<double> phases, const Alphabet& alphabet) {
    if (!alphabet.is_discrete()) return PhaseSequence::continuous(std::move(phases));
    const int m = alphabet.m;
    const double step = kTwoPi / static_cast<double>(m);
    std::vector<int> idx(phases.size());
    for (size_t i = 0; i < phases.size(); ++i) {
        long long j = std::llround(wrap_phase(phases[i]) / step);
        idx[i] = static_cast<int>(j % m);
    }
    return PhaseSequence::discrete(std::move(idx), m);
}

static std::vector<double> frank_phases(int n) {
    int L = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
    if (L * L != n) throw std::invalid_argument("frank-length-not-square");
    std::vector<double> phases(n);
    for (int row = 0; row < L; ++row)
        for (int col = 0; col < L; ++col)
            phases[row * L + col] = (kTwoPi / L) * row * col;
    return phases;
}

static std::vector<double> golomb_phases(int n) {
    std::vector<double> phases(n);
    for (int i = 1; i <= n; ++i)
        phases[i - 1] = kPi * static_cast<double>(i) * static_cast<double>(i - 1) / n;
    return phases;
}

PhaseSequence generate(StartKind kind, int n, const Alphabet& alphabet, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sequence length must be at least 2");
    switch (kind) {
    case StartKind::Frank:
        return from_raw_phases(frank_phases(n), alphabet);
    case StartKind::Golomb:
        return from_raw_phases(golomb_phases(n), alphabet);
    case StartKind::Warm:
        throw std::invalid_argument("warm start needs an explicit sequence");
    case StartKind::BinaryRandom:
        if (!alphabet.is_binary()) throw std::invalid_argument("binary start requires a binary alphabet");
        [[fallthrough]];
    case StartKind::Random: {
        Rng rng(seed);
        if (alphabet.is_discrete()) {
            std::vector<int> idx(n);
            for (int i = 0; i < n; ++i) idx[i] = static_cast<int>(rng.uniform_index(alphabet.m));
            return PhaseSequence::discrete(std::move(idx), alphabet.m);
        }
        std::vector<double> phases(n);
        for (int i = 0; i < n; ++i) phases[i] = rng.uniform() * kTwoPi;
        return PhaseSequence::continuous(std::move(phases));
    }
    }
    throw std::logic_error("unreachable");
}

const char* start_kind_name(StartKind kind) {
    switch (kind) {
    case StartKind::Frank: return "frank";
    case StartKind::Golomb: return "golomb";
    case StartKind::Random: return "random";
    case StartKind::BinaryRandom: return "binary-random";
    case StartKind::Warm: return "warm";
    }
    return "?";
}

}
