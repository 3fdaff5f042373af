#include "phasecd/sequence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace phasecd {

Alphabet Alphabet::discrete(int m) {
    if (m < 2) throw std::invalid_argument("alphabet size must be at least 2");
    return {AlphabetKind::Discrete, m};
}

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

std::complex<double> unit_root(long long idx, int m) {
    long long j = idx % m;
    if (j < 0) j += m;
    long long q = 4 * j;
    if (q % m == 0) {
        switch (q / m) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    double ang = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    return {std::cos(ang), std::sin(ang)};
}

std::complex<double> unit_phase(double phi) {
    return {std::cos(phi), std::sin(phi)};
}

PhaseSequence PhaseSequence::continuous(std::vector<double> phases) {
    if (phases.size() < 2) throw std::invalid_argument("sequence length must be at least 2");
    PhaseSequence s;
    s.alphabet_ = Alphabet::continuous();
    s.n_ = static_cast<int>(phases.size());
    for (double& p : phases) p = wrap_phase(p);
    s.phases_ = std::move(phases);
    return s;
}

PhaseSequence PhaseSequence::discrete(std::vector<int> indices, int m) {
    if (indices.size() < 2) throw std::invalid_argument("sequence length must be at least 2");
    Alphabet a = Alphabet::discrete(m);
    for (int idx : indices) {
        if (idx < 0 || idx >= m)
            throw std::invalid_argument("phase index " + std::to_string(idx) +
                                        " outside alphabet of size " + std::to_string(m));
    }
    PhaseSequence s;
    s.alphabet_ = a;
    s.n_ = static_cast<int>(indices.size());
    s.indices_ = std::move(indices);
    return s;
}

double PhaseSequence::phase(int i) const {
    if (alphabet_.is_discrete())
        return kTwoPi * static_cast<double>(indices_[i]) / static_cast<double>(alphabet_.m);
    return phases_[i];
}

int PhaseSequence::index(int i) const {
    if (!alphabet_.is_discrete()) throw std::logic_error("continuous sequence has no indices");
    return indices_[i];
}

std::complex<double> PhaseSequence::entry(int i) const {
    if (alphabet_.is_discrete()) return unit_root(indices_[i], alphabet_.m);
    return unit_phase(phases_[i]);
}

void PhaseSequence::set_phase(int i, double phi) {
    if (alphabet_.is_discrete()) throw std::logic_error("discrete sequence takes indices, not phases");
    phases_[i] = wrap_phase(phi);
}

void PhaseSequence::set_index(int i, int idx) {
    if (!alphabet_.is_discrete()) throw std::logic_error("continuous sequence takes phases, not indices");
    if (idx < 0 || idx >= alphabet_.m) throw std::invalid_argument("phase index outside alphabet");
    indices_[i] = idx;
}

const std::vector<double>& PhaseSequence::phases() const {
    if (alphabet_.is_discrete()) throw std::logic_error("discrete sequence stores indices");
    return phases_;
}

const std::vector<int>& PhaseSequence::indices() const {
    if (!alphabet_.is_discrete()) throw std::logic_error("continuous sequence stores phases");
    return indices_;
}

std::vector<double> PhaseSequence::phase_values() const {
    std::vector<double> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = phase(i);
    return out;
}

}
