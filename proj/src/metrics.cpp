#include "phasecd/metrics.hpp"

#include <cmath>

namespace phasecd {

AutocorrVector autocorrelation(const PhaseSequence& seq) {
    const int n = seq.size();
    std::vector<std::complex<double>> x(n);
    for (int i = 0; i < n; ++i) x[i] = seq.entry(i);

    AutocorrVector acf;
    acf.r0 = static_cast<double>(n);
    acf.r.resize(n - 1);
    for (int k = 1; k < n; ++k) {
        std::complex<double> s{0.0, 0.0};
        for (int i = 0; i + k < n; ++i) s += std::conj(x[i]) * x[i + k];
        acf.r[k - 1] = s;
    }
    return acf;
}

static std::vector<double> squared_moduli(const std::vector<std::complex<double>>& r) {
    std::vector<double> sq(r.size());
    for (size_t k = 0; k < r.size(); ++k)
        sq[k] = r[k].real() * r[k].real() + r[k].imag() * r[k].imag();
    return sq;
}

double minmax_objective(const std::vector<double>& sq, double theta) {
    double total = 0.0;
    for (double v : sq) total += v;
    double best = 0.0;
    bool first = true;
    for (double v : sq) {
        double g = theta * v + (1.0 - theta) * total;
        if (first || g > best) { best = g; first = false; }
    }
    return best;
}

double psl(const AutocorrVector& acf) {
    std::vector<double> sq = squared_moduli(acf.r);
    double m = 0.0;
    for (double v : sq) m = std::max(m, v);
    return std::sqrt(m);
}

double isl(const AutocorrVector& acf) {
    std::vector<double> sq = squared_moduli(acf.r);
    double s = 0.0;
    for (double v : sq) s += v;
    return s;
}

double objective_value(const PhaseSequence& seq, double theta) {
    AutocorrVector acf = autocorrelation(seq);
    return minmax_objective(squared_moduli(acf.r), theta);
}

double psl_db(double psl_linear, int n) {
    return 20.0 * std::log10(psl_linear / static_cast<double>(n));
}

double isl_db(double isl_linear, int n) {
    return 10.0 * std::log10(isl_linear / (static_cast<double>(n) * static_cast<double>(n)));
}

}
