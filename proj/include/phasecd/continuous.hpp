#pragma once

#include <complex>
#include <vector>

#include "phasecd/quartic.hpp"
#include "phasecd/solver.hpp"

namespace phasecd {

// squared lag modulus as a rational quartic of beta = tan(phi/2):
// |a e^{j phi} + b e^{-j phi} + c|^2 = p(beta) / (1 + beta^2)^2, valid for
// phi != pi; the leading coefficient equals the squared modulus at phi = pi
QuarticPoly phase_power_quartic(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c);

// theta p_k + (1 - theta) sum_l p_l, coefficient-wise, one quartic per lag
std::vector<QuarticPoly> combine_lag_quartics(const std::vector<QuarticPoly>& lag,
                                              double theta);

struct FeasibilityOutcome {
    bool feasible = false;
    bool at_pi = false;   // only phi = pi meets the level
    double beta = 0.0;    // a point with objective <= gamma_bar, when !at_pi
};

struct FeasibilityScratch {
    std::vector<Interval> iv;
};

// does any phase reach objective level gamma_bar? combined holds the already
// theta-mixed quartics; a point in the tan-half-angle chart is preferred and
// phi = pi is consulted only when the chart has no feasible point
FeasibilityOutcome feasibility_check(const std::vector<QuarticPoly>& combined,
                                     double gamma_bar, FeasibilityScratch& scratch);

struct ContinuousWorkspace {
    CoordinateContext ctx;
    std::vector<QuarticPoly> lag;
    std::vector<QuarticPoly> combined;
    FeasibilityScratch scratch;
    std::vector<std::complex<double>> rho_cand;
};

// bisection on the objective level over one entry's phase; the proposal is
// marked improved only when the re-evaluated candidate beats the cached
// objective, so accepting it keeps the run monotone
EntryProposal optimize_entry_continuous(const SolverState& st, int d, double theta,
                                        double eps1, ContinuousWorkspace& ws);

}
