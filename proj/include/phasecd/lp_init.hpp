#pragma once

#include <complex>
#include <vector>

#include "phasecd/continuous.hpp"
#include "phasecd/discrete.hpp"
#include "phasecd/solver.hpp"

namespace phasecd {

// per-lag quadratic majorizer of (|r|/t)^p on [0, t]: after scaling, lag k
// contributes tau[k] |r|^2 + lambda[k] |r| with equality at the current
// modulus; tau is normalized to max 1 and lambda carries the level t
struct SurrogateWeights {
    std::vector<double> tau;
    std::vector<double> lambda;
    double t = 0.0;
    double p = 2.0;
    bool plain_quadratic = false;  // p == 2: tau all one, lambda all zero
};

// m * (sum (x/m)^p)^(1/p) with m = max x; 0 for an all-zero input
double lp_norm(const std::vector<double>& xs, double p);

void surrogate_weights(const std::vector<double>& lag_abs, double p,
                       SurrogateWeights& out);

// (1 + beta^2)^2 times the linearized lag modulus Re(conj(rho_hat) r~(phi))
// in the half-angle variable; rho_hat is the unit direction of the current
// lag value
QuarticPoly phase_match_quartic(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c, std::complex<double> rho_hat);

struct LpWorkspace {
    SurrogateWeights w;
    std::vector<double> lag_abs;
    std::vector<QuarticPoly> hq;
    std::vector<double> sqrt_row;
    ContinuousWorkspace cont;
    DiscreteWorkspace disc;
};

// one-entry minimization of the surrogate sum tau |r~_k|^2 + lambda |r~_k|;
// candidates are the stationary points of the smooth relaxation plus the
// current phase and pi, scored through one shared evaluation path
EntryProposal optimize_entry_lp_continuous(const SolverState& st, int d,
                                           const SurrogateWeights& w, LpWorkspace& ws);

EntryProposal optimize_entry_lp_discrete(const SolverState& st, int d,
                                         const SurrogateWeights& w, LpWorkspace& ws);

struct LpSchedule {
    std::vector<double> powers;    // increasing, e.g. 2, 4, ..., 8192
    double inner_eps = 1e-5;       // stage stop on the level change
    int max_sweeps = 100;          // per stage
};

LpSchedule default_lp_schedule();

struct LpRunInfo {
    int stages = 0;
    long long sweeps = 0;
    double final_level = 0.0;  // l_p proxy level after the last stage
};

// graduated rounds of surrogate sweeps with increasing p; keeps the cached
// objective coherent by committing through the canonical path
LpRunInfo run_lp_schedule(SolverState& st, const LpSchedule& schedule, double theta,
                          LpWorkspace& ws);

}
