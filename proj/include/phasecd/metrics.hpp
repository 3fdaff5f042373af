#pragma once
#include "phasecd/sequence.hpp"

namespace phasecd {

// Aperiodic autocorrelation, positive lags only: r[k-1] = sum_i conj(x_i) x_{i+k}.
// r0 is N exactly (entries are unit modulus by construction).
struct AutocorrVector {
    std::vector<std::complex<double>> r;
    double r0 = 0.0;
};

AutocorrVector autocorrelation(const PhaseSequence& seq);

double psl(const AutocorrVector& acf);
double isl(const AutocorrVector& acf);

// max_k [ theta*|r_k|^2 + (1-theta)*sum_l |r_l|^2 ]; equals theta*PSL^2 + (1-theta)*ISL
double objective_value(const PhaseSequence& seq, double theta);

// shared min-max kernel over the squared lag moduli; every objective number in
// the library funnels through this one loop so traces compare bitwise
double minmax_objective(const std::vector<double>& sq, double theta);

// report-side dB normalization against the mainlobe r0 = N
double psl_db(double psl_linear, int n);
double isl_db(double isl_linear, int n);

}
