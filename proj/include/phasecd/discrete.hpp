#pragma once

#include <complex>
#include <vector>

#include "phasecd/solver.hpp"

namespace phasecd {

// squared lag moduli for every alphabet candidate of one entry,
// row-major over lags: v[k * m + i] = |a_k w^i + b_k w^-i + c_k|^2
struct LagTable {
    int lags = 0;
    int m = 0;
    std::vector<double> v;

    double at(int k, int i) const { return v[static_cast<size_t>(k) * m + i]; }
};

void lag_response_table(const CoordinateContext& ctx, int m, LagTable& out);

// integrated level per candidate, summing lags in ascending order; every
// integrated-level path goes through here so equal-weight variants agree
// bit for bit
void isl_scores(const LagTable& t, std::vector<double>& out);

// index of the smallest score; the current index wins when it is within a
// relative snap tolerance of the minimum, otherwise the lowest tied index
int argmin_with_snap(const std::vector<double>& scores, int cur);

struct DiscreteWorkspace {
    CoordinateContext ctx;
    LagTable table;
    std::vector<double> scores;
    std::vector<double> sums;
    std::vector<std::complex<double>> roots;     // cached m-th roots
    std::vector<std::complex<double>> conj_roots;
    std::vector<std::complex<double>> rho_cand;
};

// exhaustive scan over the m candidate phases of entry d; a move is proposed
// only when the snapped argmin differs from the current index
EntryProposal optimize_entry_discrete(const SolverState& st, int d, double theta,
                                      DiscreteWorkspace& ws);

// two-candidate specialization; with +-1 entries every lag sum stays real, so
// the scan runs in exact real arithmetic
EntryProposal optimize_entry_binary(const SolverState& st, int d, double theta,
                                    DiscreteWorkspace& ws);

}
