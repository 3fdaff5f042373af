#pragma once
#include "phasecd/rng.hpp"
#include "phasecd/sequence.hpp"

namespace phasecd {

enum class StartKind { Frank, Golomb, Random, BinaryRandom, Warm };

// Deterministic for Frank/Golomb; seeded for the random kinds. Frank requires
// a perfect-square length. For discrete alphabets the classical phases are
// quantized to the nearest alphabet index.
PhaseSequence generate(StartKind kind, int n, const Alphabet& alphabet, std::uint64_t seed = 0);

const char* start_kind_name(StartKind kind);

}
