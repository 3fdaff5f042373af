#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "phasecd/quartic.hpp"
#include "phasecd/rng.hpp"

using namespace phasecd;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool has_root_near(const std::vector<double>& roots, double want, double tol) {
    for (double r : roots)
        if (std::abs(r - want) <= tol * (1.0 + std::abs(want))) return true;
    return false;
}
}

TEST_SUITE("quartic") {

TEST_CASE("eval and term_scale agree on sign-free inputs") {
    QuarticPoly q{{1.0, 2.0, 3.0, 4.0, 5.0}};
    CHECK(q.eval(2.0) == doctest::Approx(16.0 + 16.0 + 12.0 + 8.0 + 5.0));
    CHECK(q.term_scale(2.0) == doctest::Approx(q.eval(2.0)));
    QuarticPoly mixed{{1.0, -2.0, 3.0, -4.0, 5.0}};
    CHECK(mixed.term_scale(2.0) == doctest::Approx(q.eval(2.0)));
    CHECK(mixed.max_abs_coeff() == 5.0);
}

TEST_CASE("closed-form roots of factored polynomials") {
    auto p = oracle::poly_from_roots(1.0, {1.0, 2.0, 3.0, 4.0});
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(roots[i] == doctest::Approx(i + 1.0).epsilon(1e-9));

    SUBCASE("roots come back ascending and distinct") {
        for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i] > roots[i - 1]);
    }
}

TEST_CASE("degenerate degrees fall through to lower-order formulas") {
    QuarticPoly cubic{{0.0, 1.0, 0.0, 0.0, -8.0}};
    auto r3 = real_roots(cubic);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == doctest::Approx(2.0).epsilon(1e-12));

    QuarticPoly quad{{0.0, 0.0, 1.0, -3.0, 2.0}};
    auto r2 = real_roots(quad);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx(1.0));
    CHECK(r2[1] == doctest::Approx(2.0));

    QuarticPoly lin{{0.0, 0.0, 0.0, 2.0, -5.0}};
    auto r1 = real_roots(lin);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == doctest::Approx(2.5));

    QuarticPoly constant{{0.0, 0.0, 0.0, 0.0, 3.0}};
    CHECK(real_roots(constant).empty());

    CHECK_THROWS_AS(real_roots(QuarticPoly{}), ZeroPolynomialError);
}

TEST_CASE("no real roots when the polynomial stays positive") {
    QuarticPoly p{{1.0, 0.0, 0.0, 0.0, 1.0}};  // x^4 + 1
    CHECK(real_roots(p).empty());
    QuarticPoly q{{1.0, 0.0, 2.0, 0.0, 3.0}};
    CHECK(real_roots(q).empty());
}

TEST_CASE("biquadratic split") {
    auto p = oracle::poly_from_roots(1.0, {-2.0, -1.0, 1.0, 2.0});  // x^4 - 5x^2 + 4
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == doctest::Approx(-2.0));
    CHECK(roots[1] == doctest::Approx(-1.0));
    CHECK(roots[2] == doctest::Approx(1.0));
    CHECK(roots[3] == doctest::Approx(2.0));
}

TEST_CASE("double roots are found once") {
    auto p = oracle::poly_from_roots(2.0, {1.0, 1.0, 3.0, 5.0});
    auto roots = real_roots(p);
    CHECK(has_root_near(roots, 1.0, 1e-5));
    CHECK(has_root_near(roots, 3.0, 1e-7));
    CHECK(has_root_near(roots, 5.0, 1e-7));
    int near_one = 0;
    for (double r : roots)
        if (std::abs(r - 1.0) < 1e-3) ++near_one;
    CHECK(near_one == 1);
}

TEST_CASE("random factored quartics recover their roots") {
    Rng rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> want(4);
        want[0] = 20.0 * rng.uniform() - 10.0;
        for (int i = 1; i < 4; ++i) want[i] = want[i - 1] + 0.1 + 5.0 * rng.uniform();
        double lead = (rng.uniform() < 0.5 ? -1.0 : 1.0) *
                      std::pow(10.0, 3.0 * rng.uniform() - 1.5);
        auto p = oracle::poly_from_roots(lead, want);
        auto roots = real_roots(p);
        REQUIRE(roots.size() == 4);
        for (int i = 0; i < 4; ++i) {
            CHECK(roots[i] == doctest::Approx(want[i]).epsilon(1e-6));
        }
    }
}

TEST_CASE("random coefficient quartics agree with a companion-matrix oracle") {
    Rng rng(555);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto p = oracle::random_quartic(rng, true);
        auto mine = real_roots(p);
        std::vector<double> desc(p.c.begin(), p.c.end());
        auto ref = oracle::companion_real_roots(desc);

        // every reported root must carry a small relative residual
        for (double r : mine) {
            CHECK(std::abs(p.eval(r)) <= 1e-6 * (1.0 + p.term_scale(r)));
        }
        // every well-separated oracle root must be reported
        for (double r : ref) {
            bool isolated = true;
            for (double s : ref)
                if (s != r && std::abs(s - r) < 1e-4 * (1.0 + std::abs(r))) isolated = false;
            if (!isolated) continue;
            if (std::abs(p.eval(r)) > 1e-9 * (1.0 + p.term_scale(r))) continue;
            CHECK(has_root_near(mine, r, 1e-5));
            ++checked;
        }
    }
    CHECK(checked > 200);  // the cross-check actually exercised real cases
}

TEST_CASE("positive set of a parabola-shaped quartic") {
    QuarticPoly p{{0.0, 0.0, 1.0, 0.0, -1.0}};  // x^2 - 1
    auto s = strict_positive_set(p);
    REQUIRE(s.intervals().size() == 2);
    CHECK(s.intervals()[0].lo == -kInf);
    CHECK(s.intervals()[0].hi == doctest::Approx(-1.0));
    CHECK(s.intervals()[1].lo == doctest::Approx(1.0));
    CHECK(s.intervals()[1].hi == kInf);
    CHECK(s.contains(-2.0));
    CHECK(s.contains(2.0));
    CHECK_FALSE(s.contains(0.0));
    CHECK_FALSE(s.contains(-1.0));
    CHECK_FALSE(s.contains(1.0));
}

TEST_CASE("touching root leaves a single-point gap") {
    QuarticPoly p{{0.0, 0.0, 1.0, -2.0, 1.0}};  // (x-1)^2
    auto s = strict_positive_set(p);
    REQUIRE(s.intervals().size() == 2);
    CHECK(s.intervals()[0].hi == doctest::Approx(1.0));
    CHECK(s.intervals()[1].lo == doctest::Approx(1.0));
    CHECK_FALSE(s.contains(1.0));
    CHECK(s.contains(0.999));
    CHECK(s.contains(1.001));
}

TEST_CASE("sign-definite cases") {
    QuarticPoly up{{1.0, 0.0, 0.0, 0.0, 1.0}};
    auto all = strict_positive_set(up);
    REQUIRE(all.intervals().size() == 1);
    CHECK(covers_reals(all));
    QuarticPoly down{{-1.0, 0.0, 0.0, 0.0, -1.0}};
    CHECK(strict_positive_set(down).empty());
    QuarticPoly pos_const{{0.0, 0.0, 0.0, 0.0, 4.0}};
    CHECK(covers_reals(strict_positive_set(pos_const)));
    QuarticPoly neg_const{{0.0, 0.0, 0.0, 0.0, -4.0}};
    CHECK(strict_positive_set(neg_const).empty());
    CHECK_THROWS_AS(strict_positive_set(QuarticPoly{}), ZeroPolynomialError);
}

TEST_CASE("positive sets survive a dense sign sweep") {
    Rng rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        auto p = oracle::random_quartic(rng, true);
        auto s = strict_positive_set(p);
        CHECK(oracle::positive_set_disagreements(p, s, rng, 200, 12.0) == 0);
    }
    SUBCASE("constructed double roots") {
        for (int trial = 0; trial < 100; ++trial) {
            double r = 10.0 * rng.uniform() - 5.0;
            double t = r + 0.5 + 4.0 * rng.uniform();
            auto p = oracle::poly_from_roots(trial % 2 ? 1.0 : -1.0, {r, r, t, t + 1.0});
            auto s = strict_positive_set(p);
            CHECK(oracle::positive_set_disagreements(p, s, rng, 200, 12.0) == 0);
        }
    }
}

TEST_CASE("append variant reports the zero polynomial instead of throwing") {
    std::vector<Interval> out{{0.0, 1.0}};
    CHECK_FALSE(append_positive_intervals(QuarticPoly{}, out));
    CHECK(out.size() == 1);  // untouched
    QuarticPoly p{{0.0, 0.0, 1.0, 0.0, -1.0}};
    CHECK(append_positive_intervals(p, out));
    CHECK(out.size() == 3);
}

TEST_CASE("interval union merges overlaps and keeps shared endpoints open") {
    std::vector<Interval> iv{{0.0, 2.0}, {1.0, 3.0}, {4.0, 5.0}, {5.0, 6.0},
                             {-kInf, -10.0}, {2.0, 2.0}, {9.0, 7.0}};
    interval_union_inplace(iv);
    REQUIRE(iv.size() == 4);
    CHECK(iv[0].lo == -kInf);
    CHECK(iv[0].hi == -10.0);
    CHECK(iv[1].lo == 0.0);
    CHECK(iv[1].hi == 3.0);
    CHECK(iv[2].lo == 4.0);
    CHECK(iv[2].hi == 5.0);
    CHECK(iv[3].lo == 5.0);
    CHECK(iv[3].hi == 6.0);
}

TEST_CASE("union of interval sets") {
    auto a = IntervalSet::from_sorted({{-kInf, 0.0}});
    auto b = IntervalSet::from_sorted({{0.0, kInf}});
    auto u = interval_union({a, b});
    REQUIRE(u.intervals().size() == 2);
    CHECK_FALSE(covers_reals(u));
    auto w = complement_witness(u);
    REQUIRE(w.has_value());
    CHECK(*w == 0.0);
    CHECK_FALSE(u.contains(*w));
}

TEST_CASE("coverage detection") {
    CHECK(covers_reals(IntervalSet::all()));
    CHECK_FALSE(covers_reals(IntervalSet::empty_set()));
    CHECK_FALSE(covers_reals(IntervalSet::from_sorted({{-kInf, 5.0}})));
    CHECK_FALSE(complement_witness(IntervalSet::all()).has_value());
}

TEST_CASE("complement witness prefers the leftmost gap") {
    auto s = IntervalSet::from_sorted({{1.0, 2.0}, {3.0, 4.0}});
    auto w = complement_witness(s);
    REQUIRE(w.has_value());
    CHECK(*w <= 1.0);
    CHECK_FALSE(s.contains(*w));

    auto tail = IntervalSet::from_sorted({{-kInf, 5.0}});
    auto wt = complement_witness(tail);
    REQUIRE(wt.has_value());
    CHECK(*wt >= 5.0);
    CHECK_FALSE(tail.contains(*wt));

    auto none = IntervalSet::empty_set();
    auto wn = complement_witness(none);
    REQUIRE(wn.has_value());  // anything outside the empty union works

    SUBCASE("witness always escapes the union on random inputs") {
        Rng rng(808);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Interval> iv;
            int parts = 1 + static_cast<int>(rng.uniform_index(4));
            for (int i = 0; i < parts; ++i) {
                double lo = 20.0 * rng.uniform() - 10.0;
                iv.push_back({lo, lo + 5.0 * rng.uniform()});
            }
            interval_union_inplace(iv);
            auto set = IntervalSet::from_sorted(iv);
            auto wit = complement_witness(set);
            REQUIRE(wit.has_value());
            CHECK_FALSE(set.contains(*wit));
        }
    }
}

}
