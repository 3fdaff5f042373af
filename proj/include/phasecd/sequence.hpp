#pragma once
#include <complex>
#include <cstdint>
#include <vector>

namespace phasecd {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class AlphabetKind { Continuous, Discrete };

struct Alphabet {
    AlphabetKind kind = AlphabetKind::Continuous;
    int m = 0;  // number of phases, discrete only

    static Alphabet continuous() { return {AlphabetKind::Continuous, 0}; }
    static Alphabet discrete(int m);
    static Alphabet binary() { return discrete(2); }

    bool is_discrete() const { return kind == AlphabetKind::Discrete; }
    bool is_binary() const { return is_discrete() && m == 2; }
    bool operator==(const Alphabet&) const = default;
};

// phi wrapped into [0, 2*pi)
double wrap_phase(double phi);

// exp(j*2*pi*idx/m); the four axis points come out exact so binary and
// quadrature codes stay in integer arithmetic throughout
std::complex<double> unit_root(long long idx, int m);
std::complex<double> unit_phase(double phi);

// A length-N code stored as phases. Continuous codes hold raw radians in
// [0, 2*pi); discrete codes hold integer indices j with phase 2*pi*j/m, so
// alphabet membership survives round-trips bit-exactly. Entries are always
// derived as exp(j*phi) on demand; no complex value is ever stored.
class PhaseSequence {
public:
    static PhaseSequence continuous(std::vector<double> phases);
    static PhaseSequence discrete(std::vector<int> indices, int m);

    int size() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }

    double phase(int i) const;
    int index(int i) const;
    std::complex<double> entry(int i) const;

    void set_phase(int i, double phi);  // continuous only
    void set_index(int i, int idx);     // discrete only

    const std::vector<double>& phases() const;
    const std::vector<int>& indices() const;
    std::vector<double> phase_values() const;

    bool operator==(const PhaseSequence&) const = default;

private:
    PhaseSequence() = default;
    Alphabet alphabet_;
    int n_ = 0;
    std::vector<double> phases_;
    std::vector<int> indices_;
};

}
