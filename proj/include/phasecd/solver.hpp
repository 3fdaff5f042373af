#pragma once

#include <complex>
#include <vector>

#include "phasecd/metrics.hpp"
#include "phasecd/sequence.hpp"

namespace phasecd {

// working state for coordinate updates: the entries as unit complex numbers
// plus cached lag sums rho_k = sum_i x_i conj(x_{i+k}), k = 1..n-1 (the
// conjugate of the reported autocorrelation; equal in modulus lag by lag)
struct SolverState {
    PhaseSequence seq;
    std::vector<std::complex<double>> x;
    std::vector<std::complex<double>> rho;
    double objective = 0.0;
};

SolverState make_state(const PhaseSequence& seq, double theta);

// recompute x, rho and the objective from seq, discarding incremental drift
void refresh_state(SolverState& st, double theta);

// largest relative deviation between the cached rho and a fresh recomputation
double max_rho_drift(const SolverState& st);

// per-coordinate view: with entry d replaced by u, the lag sums become
// r~_k(u) = a_k u + b_k conj(u) + c_k
struct CoordinateContext {
    int d = 0;
    std::vector<std::complex<double>> a, b, c;
};

void build_context(const SolverState& st, int d, CoordinateContext& ctx);
CoordinateContext build_context(const SolverState& st, int d);

// lag sums after replacing entry d with unit value u
void candidate_rho(const CoordinateContext& ctx, std::complex<double> u,
                   std::vector<std::complex<double>>& out);

// objective computed from lag sums; bitwise identical to objective_value on
// the matching sequence (the conjugate convention flips only imaginary signs)
double objective_from_rho(const std::vector<std::complex<double>>& rho, double theta);

void rho_metrics(const std::vector<std::complex<double>>& rho, double& psl_out,
                 double& isl_out);

// outcome of one entry optimization; nothing is written to the state
struct EntryProposal {
    double phi = 0.0;               // continuous phase (also set for discrete)
    int index = -1;                 // alphabet index, -1 for continuous
    std::complex<double> u{1.0, 0.0};
    double value = 0.0;             // objective after the move, canonical form
    int iterations = 0;             // bisection steps for the continuous rule
    bool improved = false;
};

// install an accepted proposal: updates seq, x, rho and the cached objective
void apply_proposal(SolverState& st, const EntryProposal& prop, int d, double theta);

}
