#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace phasecd {

// raised when an operation needs a nonzero polynomial and all coefficients vanish
class ZeroPolynomialError : public std::runtime_error {
public:
    ZeroPolynomialError() : std::runtime_error("zero-polynomial") {}
};

// degree <= 4 polynomial, coefficients descending: c[0] x^4 + ... + c[4]
struct QuarticPoly {
    std::array<double, 5> c{};

    double eval(double x) const {
        double v = c[0];
        for (int i = 1; i < 5; ++i) v = v * x + c[i];
        return v;
    }

    // magnitude of the evaluation before cancellation; scales residual tolerances
    double term_scale(double x) const {
        double ax = x < 0.0 ? -x : x;
        double v = c[0] < 0.0 ? -c[0] : c[0];
        for (int i = 1; i < 5; ++i) v = v * ax + (c[i] < 0.0 ? -c[i] : c[i]);
        return v;
    }

    double max_abs_coeff() const;
};

// distinct real roots, ascending; closed-form with a companion-matrix fallback
// for ill-conditioned inputs; throws ZeroPolynomialError on the zero polynomial
std::vector<double> real_roots(const QuarticPoly& p);

// open interval (lo, hi); lo may be -inf, hi may be +inf
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// finite union of disjoint open intervals, kept sorted; single-point gaps
// between abutting intervals are preserved, not absorbed
class IntervalSet {
public:
    static IntervalSet all();
    static IntervalSet empty_set();
    static IntervalSet from_sorted(std::vector<Interval> iv);

    const std::vector<Interval>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    bool contains(double x) const;

private:
    std::vector<Interval> iv_;
};

// {x : p(x) > 0} as disjoint open intervals
IntervalSet strict_positive_set(const QuarticPoly& p);

// appends the same intervals onto out without clearing it; returns false for
// the zero polynomial instead of throwing (the set is then empty)
bool append_positive_intervals(const QuarticPoly& p, std::vector<Interval>& out);

// sorts and merges arbitrary open intervals in place into the canonical
// disjoint form; allocation-free apart from the vector it is handed
void interval_union_inplace(std::vector<Interval>& iv);

IntervalSet interval_union(const std::vector<IntervalSet>& sets);

bool covers_reals(const std::vector<Interval>& sorted_disjoint);
bool covers_reals(const IntervalSet& s);

// a point outside the union, preferring the leftmost gap; nullopt if none
std::optional<double> complement_witness(const std::vector<Interval>& sorted_disjoint);
std::optional<double> complement_witness(const IntervalSet& s);

}
