#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "phasecd/generators.hpp"
#include "phasecd/metrics.hpp"
#include "phasecd/rng.hpp"
#include "phasecd/sequence.hpp"

using namespace phasecd;

TEST_SUITE("core") {

TEST_CASE("wrap_phase lands in [0, 2pi)") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(kTwoPi) == 0.0);
    CHECK(wrap_phase(-kTwoPi) == 0.0);
    CHECK(wrap_phase(3.0) == doctest::Approx(3.0));
    CHECK(wrap_phase(-1.0) == doctest::Approx(kTwoPi - 1.0));
    CHECK(wrap_phase(7.0 * kPi) == doctest::Approx(kPi));
    for (double phi : {-123.456, -1e-9, 0.25, 6.28, 1e4}) {
        double w = wrap_phase(phi);
        CHECK(w >= 0.0);
        CHECK(w < kTwoPi);
        CHECK(wrap_phase(w) == w);  // idempotent
    }
}

TEST_CASE("unit_root is exact on the axes") {
    CHECK(unit_root(0, 4) == std::complex<double>(1.0, 0.0));
    CHECK(unit_root(1, 4) == std::complex<double>(0.0, 1.0));
    CHECK(unit_root(2, 4) == std::complex<double>(-1.0, 0.0));
    CHECK(unit_root(3, 4) == std::complex<double>(0.0, -1.0));
    CHECK(unit_root(0, 2) == std::complex<double>(1.0, 0.0));
    CHECK(unit_root(1, 2) == std::complex<double>(-1.0, 0.0));
    CHECK(unit_root(4, 8) == std::complex<double>(-1.0, 0.0));
    SUBCASE("periodic in the index") {
        for (int m : {2, 3, 5, 8}) {
            for (int k = 0; k < m; ++k) {
                CHECK(unit_root(k + m, m) == unit_root(k, m));
                CHECK(unit_root(k - m, m) == unit_root(k, m));
            }
        }
    }
    SUBCASE("unit modulus") {
        for (int m : {3, 7, 64}) {
            for (int k = 0; k < m; ++k) {
                CHECK(std::abs(unit_root(k, m)) == doctest::Approx(1.0).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("alphabet construction and validation") {
    CHECK(Alphabet::binary().is_binary());
    CHECK(Alphabet::discrete(8).m == 8);
    CHECK_FALSE(Alphabet::continuous().is_discrete());
    CHECK_THROWS_AS(Alphabet::discrete(1), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::discrete(0), std::invalid_argument);
}

TEST_CASE("discrete sequences round-trip indices bit-exactly") {
    auto seq = PhaseSequence::discrete({0, 3, 1, 2, 3}, 4);
    CHECK(seq.size() == 5);
    for (int i = 0; i < seq.size(); ++i) {
        CHECK(seq.entry(i) == unit_root(seq.index(i), 4));
    }
    seq.set_index(2, 3);
    CHECK(seq.index(2) == 3);
    CHECK(seq.indices() == std::vector<int>{0, 3, 3, 2, 3});
    CHECK_THROWS_AS(seq.set_phase(0, 1.0), std::logic_error);
    CHECK_THROWS_AS(seq.phases(), std::logic_error);
    CHECK_THROWS_AS(seq.set_index(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(PhaseSequence::discrete({0, 9}, 4), std::invalid_argument);
}

TEST_CASE("continuous sequences store wrapped phases") {
    auto seq = PhaseSequence::continuous({0.0, 1.0, 7.0});
    CHECK(seq.size() == 3);
    seq.set_phase(0, -1.0);
    CHECK(seq.phase(0) == doctest::Approx(kTwoPi - 1.0));
    CHECK(seq.phase(0) >= 0.0);
    CHECK(seq.phase(0) < kTwoPi);
    CHECK_THROWS_AS(seq.set_index(0, 1), std::logic_error);
    CHECK_THROWS_AS(seq.indices(), std::logic_error);
    CHECK_THROWS_AS(PhaseSequence::continuous({0.5}), std::invalid_argument);
}

TEST_CASE("autocorrelation matches a direct double loop") {
    for (int n : {2, 3, 5, 17, 64, 256}) {
        auto seq = oracle::random_continuous(n, 1000 + n);
        auto acf = autocorrelation(seq);
        auto ref = oracle::autocorr(oracle::entries_of(seq));
        REQUIRE(acf.r.size() == ref.size());
        CHECK(acf.r0 == static_cast<double>(n));  // exact: unit-modulus entries
        for (size_t k = 0; k < ref.size(); ++k) {
            CHECK(std::abs(acf.r[k] - ref[k]) <= 1e-12);
        }
    }
    for (int n : {2, 13, 100}) {
        auto seq = oracle::random_discrete(n, 8, 2000 + n);
        auto acf = autocorrelation(seq);
        auto ref = oracle::autocorr(oracle::entries_of(seq));
        CHECK(acf.r0 == static_cast<double>(n));
        for (size_t k = 0; k < ref.size(); ++k) {
            CHECK(std::abs(acf.r[k] - ref[k]) <= 1e-12);
        }
    }
}

TEST_CASE("last lag always has unit modulus") {
    for (int n : {2, 9, 33}) {
        auto seq = oracle::random_continuous(n, 77 + n);
        auto acf = autocorrelation(seq);
        CHECK(std::abs(acf.r.back()) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("objective endpoints reduce to isl and squared psl") {
    for (int n : {5, 12, 40}) {
        auto seq = oracle::random_continuous(n, 31 * n);
        auto acf = autocorrelation(seq);
        double p = psl(acf), s = isl(acf);
        CHECK(objective_value(seq, 0.0) == doctest::Approx(s).epsilon(1e-12));
        CHECK(objective_value(seq, 1.0) == doctest::Approx(p * p).epsilon(1e-12));
        double mid = objective_value(seq, 0.5);
        CHECK(mid == doctest::Approx(0.5 * p * p + 0.5 * s).epsilon(1e-12));
        CHECK(mid >= 1.0);  // the last lag alone contributes at least one
    }
}

TEST_CASE("objective matches the naive reference across theta") {
    for (int n : {4, 11, 30}) {
        auto seq = oracle::random_discrete(n, 16, 5 * n + 1);
        auto x = oracle::entries_of(seq);
        for (double theta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            CHECK(objective_value(seq, theta) ==
                  doctest::Approx(oracle::objective_of(x, theta)).epsilon(1e-12));
        }
    }
}

TEST_CASE("minmax kernel mixes peak and total") {
    std::vector<double> sq{1.0, 4.0, 2.0};
    CHECK(minmax_objective(sq, 1.0) == 4.0);
    CHECK(minmax_objective(sq, 0.0) == 7.0);
    CHECK(minmax_objective(sq, 0.5) == 5.5);
}

TEST_CASE("global phase rotation leaves lag moduli unchanged") {
    auto seq = oracle::random_continuous(24, 99);
    auto base = autocorrelation(seq);
    for (double shift : {0.1, 1.7, 4.0}) {
        std::vector<double> ph = seq.phases();
        for (auto& p : ph) p = wrap_phase(p + shift);
        auto rotated = PhaseSequence::continuous(std::move(ph));
        auto acf = autocorrelation(rotated);
        for (size_t k = 0; k < acf.r.size(); ++k) {
            CHECK(std::abs(acf.r[k]) == doctest::Approx(std::abs(base.r[k])).epsilon(1e-12));
        }
        CHECK(objective_value(rotated, 1.0) ==
              doctest::Approx(objective_value(seq, 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("db normalization references the mainlobe") {
    CHECK(psl_db(10.0, 10) == doctest::Approx(0.0));
    CHECK(psl_db(1.0, 10) == doctest::Approx(-20.0));
    CHECK(isl_db(100.0, 10) == doctest::Approx(0.0));
    CHECK(isl_db(1.0, 10) == doctest::Approx(-20.0));
}

TEST_CASE("known binary code: length 13") {
    auto seq = PhaseSequence::discrete({0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0}, 2);
    auto acf = autocorrelation(seq);
    CHECK(acf.r0 == 13.0);
    CHECK(psl(acf) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(isl(acf) == doctest::Approx(6.0).epsilon(1e-14));
    for (size_t k = 0; k < acf.r.size(); ++k) {
        double a = std::abs(acf.r[k]);
        CHECK((std::abs(a) < 1e-13 || std::abs(a - 1.0) < 1e-13));
    }
}

TEST_CASE("frank start needs a square length and matches the closed form") {
    auto seq = generate(StartKind::Frank, 4, Alphabet::continuous());
    REQUIRE(seq.size() == 4);
    std::vector<double> want{0.0, 0.0, 0.0, kPi};
    for (int i = 0; i < 4; ++i) {
        CHECK(seq.phase(i) == doctest::Approx(want[i]).epsilon(1e-15));
    }
    CHECK_THROWS_AS(generate(StartKind::Frank, 5, Alphabet::continuous()),
                    std::invalid_argument);
    CHECK_THROWS_WITH(generate(StartKind::Frank, 12, Alphabet::continuous()),
                      "frank-length-not-square");
}

TEST_CASE("polyphase classics quantize onto discrete alphabets") {
    auto cont = generate(StartKind::Frank, 16, Alphabet::continuous());
    auto disc = generate(StartKind::Frank, 16, Alphabet::discrete(4));
    for (int i = 0; i < 16; ++i) {
        CHECK(std::abs(disc.entry(i) - std::polar(1.0, cont.phase(i))) < 1e-12);
    }
}

TEST_CASE("golomb start follows the quadratic phase law") {
    int n = 5;
    auto seq = generate(StartKind::Golomb, n, Alphabet::continuous());
    for (int i = 1; i <= n; ++i) {
        double want = wrap_phase(kPi * i * (i - 1) / n);
        CHECK(seq.phase(i - 1) == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("random starts are seeded and deterministic") {
    auto a = generate(StartKind::Random, 20, Alphabet::continuous(), 7);
    auto b = generate(StartKind::Random, 20, Alphabet::continuous(), 7);
    auto c = generate(StartKind::Random, 20, Alphabet::continuous(), 8);
    CHECK(a == b);
    CHECK(a != c);
    auto d = generate(StartKind::Random, 20, Alphabet::discrete(8), 7);
    for (int i = 0; i < 20; ++i) {
        CHECK(d.index(i) >= 0);
        CHECK(d.index(i) < 8);
    }
    auto e = generate(StartKind::BinaryRandom, 20, Alphabet::binary(), 3);
    CHECK(e.alphabet().is_binary());
    CHECK_THROWS_AS(generate(StartKind::BinaryRandom, 20, Alphabet::continuous(), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate(StartKind::Warm, 20, Alphabet::continuous(), 3),
                    std::invalid_argument);
}

TEST_CASE("rng streams are reproducible and decorrelated") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        double u = c.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(c.uniform_index(17) < 17);
    }
    CHECK(Rng::derive(5, 0) != Rng::derive(5, 1));
    CHECK(Rng::derive(5, 0) != Rng::derive(6, 0));
    CHECK(Rng::derive(5, 3) == Rng::derive(5, 3));
}

}
