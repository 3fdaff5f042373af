#include "phasecd/quartic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace phasecd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTrimRel = 1e-12;       // leading-coefficient trim threshold
constexpr double kMergeRel = 1e-9;       // root-distinctness merge radius
constexpr double kResidualRel = 1e-8;    // accepted |p(root)| relative to local term scale
constexpr double kDerivZeroRel = 1e-7;   // derivative treated as zero at a root

double eval_desc(const double* c, int deg, double x) {
    double v = c[0];
    for (int i = 1; i <= deg; ++i) v = v * x + c[i];
    return v;
}

double term_scale_desc(const double* c, int deg, double x) {
    double ax = std::abs(x);
    double v = std::abs(c[0]);
    for (int i = 1; i <= deg; ++i) v = v * ax + std::abs(c[i]);
    return v;
}

// coefficients of the derivative, still descending
void derive_desc(const double* c, int deg, double* out) {
    for (int i = 0; i < deg; ++i) out[i] = c[i] * static_cast<double>(deg - i);
}

struct Cand {
    std::array<double, 8> x;
    int n = 0;
    void push(double v) {
        if (n < 8) x[n++] = v;
    }
};

void quadratic_roots(double b, double c, Cand& out) {
    // monic x^2 + b x + c
    double disc = b * b - 4.0 * c;
    if (disc < 0.0) return;
    double sd = std::sqrt(disc);
    if (b == 0.0) {
        out.push(-0.5 * sd);
        out.push(0.5 * sd);
        return;
    }
    double q = -0.5 * (b + std::copysign(sd, b));
    out.push(q);
    out.push(q != 0.0 ? c / q : 0.0);
}

void cubic_roots(double a, double b, double c, Cand& out) {
    // monic x^3 + a x^2 + b x + c
    double p = b - a * a / 3.0;
    double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    double shift = -a / 3.0;
    double disc = 0.25 * q * q + p * p * p / 27.0;
    if (disc > 0.0) {
        double sd = std::sqrt(disc);
        double u = std::cbrt(-0.5 * q + sd);
        double v = std::cbrt(-0.5 * q - sd);
        out.push(u + v + shift);
    } else if (p == 0.0 && q == 0.0) {
        out.push(shift);
    } else {
        double mp = std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (2.0 * p * mp);
        arg = std::clamp(arg, -1.0, 1.0);
        double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            out.push(2.0 * mp * std::cos(phi - 2.0943951023931953 * k) + shift);
    }
}

// closed-form candidates for the monic-normalized trimmed polynomial
void closed_form(const double* c, int deg, Cand& out, bool& suspicious) {
    if (deg == 1) {
        out.push(-c[1] / c[0]);
        return;
    }
    double inv = 1.0 / c[0];
    if (deg == 2) {
        quadratic_roots(c[1] * inv, c[2] * inv, out);
        return;
    }
    if (deg == 3) {
        cubic_roots(c[1] * inv, c[2] * inv, c[3] * inv, out);
        return;
    }
    double a = c[1] * inv, b = c[2] * inv, cc = c[3] * inv, d = c[4] * inv;
    double p = b - 3.0 * a * a / 8.0;
    double q = cc - a * b / 2.0 + a * a * a / 8.0;
    double r = d - a * cc / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    double shift = -a / 4.0;

    double norm = 1.0 + std::abs(p) + std::abs(q) + std::abs(r);
    double disc = 256.0 * r * r * r - 128.0 * p * p * r * r + 144.0 * p * q * q * r -
                  27.0 * q * q * q * q + 16.0 * p * p * p * p * r - 4.0 * p * p * p * q * q;
    if (std::abs(disc) < 1e-10 * norm * norm * norm) suspicious = true;

    if (std::abs(q) <= 1e-12 * norm) {
        // biquadratic in y^2
        Cand z;
        quadratic_roots(p, r, z);
        for (int i = 0; i < z.n; ++i) {
            if (z.x[i] < -1e-12 * norm) continue;
            double y = std::sqrt(std::max(z.x[i], 0.0));
            out.push(y + shift);
            out.push(-y + shift);
        }
        return;
    }
    // resolvent 8m^3 + 8p m^2 + (2p^2-8r) m - q^2; take the largest (positive) root
    Cand ms;
    cubic_roots(p, (2.0 * p * p - 8.0 * r) / 8.0, -q * q / 8.0, ms);
    double m = -kInf;
    for (int i = 0; i < ms.n; ++i) m = std::max(m, ms.x[i]);
    if (!(m > 0.0)) {
        suspicious = true;
        return;
    }
    double A = std::sqrt(2.0 * m);
    double base = p / 2.0 + m;
    Cand y;
    quadratic_roots(-A, base + q / (2.0 * A), y);
    quadratic_roots(A, base - q / (2.0 * A), y);
    for (int i = 0; i < y.n; ++i) out.push(y.x[i] + shift);
}

void companion_candidates(const double* c, int deg, Cand& out) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[deg - i] / c[0];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < deg; ++i) {
        std::complex<double> ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) <= 1e-6 * (1.0 + std::abs(ev.real())))
            out.push(ev.real());
    }
}

double polish(const double* c, int deg, const double* dc, double x) {
    double best = x;
    double bestRes = std::abs(eval_desc(c, deg, x)) / (1.0 + term_scale_desc(c, deg, x));
    for (int it = 0; it < 6; ++it) {
        double f = eval_desc(c, deg, x);
        double fp = eval_desc(dc, deg - 1, x);
        if (fp == 0.0) break;
        double step = f / fp;
        x -= step;
        if (!std::isfinite(x)) break;
        double res = std::abs(eval_desc(c, deg, x)) / (1.0 + term_scale_desc(c, deg, x));
        if (res < bestRes) {
            bestRes = res;
            best = x;
        }
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    return best;
}

struct SmallRoots {
    std::array<double, 4> x;
    int n = 0;
};

// distinct real roots of the trimmed polynomial, ascending
void trimmed_real_roots(const double* c, int deg, SmallRoots& out) {
    out.n = 0;
    if (deg == 0) return;
    double dc[4];
    derive_desc(c, deg, dc);

    Cand cand;
    bool suspicious = false;
    closed_form(c, deg, cand, suspicious);

    std::array<double, 16> keep;
    int kn = 0;
    auto consider = [&](double v) {
        if (!std::isfinite(v)) return;
        double res = std::abs(eval_desc(c, deg, v));
        if (res <= kResidualRel * (1.0 + term_scale_desc(c, deg, v)) && kn < 16) keep[kn++] = v;
        else suspicious = true;
    };
    for (int i = 0; i < cand.n; ++i) consider(polish(c, deg, dc, cand.x[i]));

    if (suspicious || (deg % 2 == 1 && kn == 0)) {
        Cand extra;
        companion_candidates(c, deg, extra);
        for (int i = 0; i < extra.n; ++i) {
            double v = polish(c, deg, dc, extra.x[i]);
            double res = std::abs(eval_desc(c, deg, v));
            if (res <= kResidualRel * (1.0 + term_scale_desc(c, deg, v)) && kn < 16) keep[kn++] = v;
        }
    }
    if (kn == 0) return;

    std::sort(keep.begin(), keep.begin() + kn);
    // collapse clusters, keeping the member with the smallest relative residual;
    // candidates scatter around a multiple root far wider than the base radius,
    // so widen it until no more than deg representatives remain rather than
    // truncating genuine roots away
    double mergeRel = kMergeRel;
    for (;;) {
        out.n = 0;
        bool overflow = false;
        int i = 0;
        while (i < kn) {
            double rep = keep[i];
            double repRes = std::abs(eval_desc(c, deg, rep)) / (1.0 + term_scale_desc(c, deg, rep));
            int j = i + 1;
            while (j < kn && keep[j] - keep[j - 1] <= mergeRel * (1.0 + std::abs(keep[j]))) {
                double res = std::abs(eval_desc(c, deg, keep[j])) / (1.0 + term_scale_desc(c, deg, keep[j]));
                if (res < repRes) {
                    rep = keep[j];
                    repRes = res;
                }
                ++j;
            }
            if (out.n == deg) {
                overflow = true;
                break;
            }
            out.x[out.n++] = rep;
            i = j;
        }
        if (!overflow) return;
        mergeRel *= 8.0;
    }
}

struct SmallIntervals {
    std::array<Interval, 5> v;
    int n = 0;
    void push(double lo, double hi) { v[n++] = {lo, hi}; }
};

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// sign of the trimmed polynomial just right of root x (and, with parity, left)
void root_local_signs(const double* c, int deg, double x, int& rightSign, int& parity) {
    double d[5][5];
    for (int i = 0; i <= deg; ++i) d[0][i] = c[i];
    int order = 1;
    for (; order <= deg; ++order) {
        derive_desc(d[order - 1], deg - order + 1, d[order]);
        double v = eval_desc(d[order], deg - order, x);
        if (order == deg || std::abs(v) > kDerivZeroRel * (1.0 + term_scale_desc(d[order], deg - order, x))) {
            rightSign = sign_of(v);
            break;
        }
    }
    parity = order % 2;
}

// positive set of the trimmed polynomial given its roots
void trimmed_positive_set(const double* c, int deg, const SmallRoots& roots, SmallIntervals& out) {
    out.n = 0;
    if (deg == 0) {
        if (c[0] > 0.0) out.push(-kInf, kInf);
        return;
    }
    if (roots.n == 0) {
        // constant sign; probe where the value is least cancelled
        static const double probes[] = {0.0, 1.0, -1.0, 2.5, -2.5, 10.0, -10.0};
        double bestRel = -1.0, bestVal = 0.0;
        for (double t : probes) {
            double v = eval_desc(c, deg, t);
            double rel = std::abs(v) / (1.0 + term_scale_desc(c, deg, t));
            if (rel > bestRel) {
                bestRel = rel;
                bestVal = v;
            }
        }
        if (bestVal > 0.0) out.push(-kInf, kInf);
        return;
    }

    const int L = roots.n;
    int rightSign[4], parity[4];
    for (int i = 0; i < L; ++i) root_local_signs(c, deg, roots.x[i], rightSign[i], parity[i]);

    int leadSign = sign_of(c[0]);
    int signs[5];  // signs of the L+1 open intervals
    signs[0] = (parity[0] == 0) ? rightSign[0] : -rightSign[0];
    for (int i = 1; i < L; ++i) signs[i] = rightSign[i - 1];
    signs[L] = rightSign[L - 1];
    // asymptotic truth wins at the unbounded ends
    int farLeft = (deg % 2 == 0) ? leadSign : -leadSign;
    if (signs[0] != farLeft) signs[0] = farLeft;
    if (signs[L] != leadSign) signs[L] = leadSign;
    // interior cross-check against the left behaviour of the next root
    for (int i = 1; i < L; ++i) {
        int fromRight = (parity[i] == 0) ? rightSign[i] : -rightSign[i];
        if (signs[i] != fromRight) {
            double mid = 0.5 * (roots.x[i - 1] + roots.x[i]);
            signs[i] = sign_of(eval_desc(c, deg, mid));
        }
    }

    for (int i = 0; i <= L; ++i) {
        if (signs[i] <= 0) continue;
        double lo = (i == 0) ? -kInf : roots.x[i - 1];
        double hi = (i == L) ? kInf : roots.x[i];
        out.push(lo, hi);
    }
}

// returns effective degree after trimming, or -1 for the zero polynomial
int trim(const std::array<double, 5>& in, double* out) {
    double scale = 0.0;
    for (double v : in) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return -1;
    int lead = 0;
    while (lead < 4 && std::abs(in[lead]) < kTrimRel * scale) ++lead;
    for (int i = lead; i <= 4; ++i) out[i - lead] = in[i];
    return 4 - lead;
}

}  // namespace

double QuarticPoly::max_abs_coeff() const {
    double s = 0.0;
    for (double v : c) s = std::max(s, std::abs(v));
    return s;
}

std::vector<double> real_roots(const QuarticPoly& p) {
    double c[5];
    int deg = trim(p.c, c);
    if (deg < 0) throw ZeroPolynomialError{};
    SmallRoots r;
    trimmed_real_roots(c, deg, r);
    return std::vector<double>(r.x.begin(), r.x.begin() + r.n);
}

IntervalSet IntervalSet::all() {
    return from_sorted({{-kInf, kInf}});
}

IntervalSet IntervalSet::empty_set() {
    return {};
}

IntervalSet IntervalSet::from_sorted(std::vector<Interval> iv) {
    IntervalSet s;
    s.iv_ = std::move(iv);
    return s;
}

bool IntervalSet::contains(double x) const {
    for (const Interval& i : iv_) {
        if (x <= i.lo) return false;
        if (x < i.hi) return true;
    }
    return false;
}

bool append_positive_intervals(const QuarticPoly& p, std::vector<Interval>& out) {
    double c[5];
    int deg = trim(p.c, c);
    if (deg < 0) return false;
    SmallRoots r;
    trimmed_real_roots(c, deg, r);
    SmallIntervals s;
    trimmed_positive_set(c, deg, r, s);
    for (int i = 0; i < s.n; ++i) out.push_back(s.v[i]);
    return true;
}

IntervalSet strict_positive_set(const QuarticPoly& p) {
    std::vector<Interval> iv;
    if (!append_positive_intervals(p, iv)) throw ZeroPolynomialError{};
    return IntervalSet::from_sorted(std::move(iv));
}

void interval_union_inplace(std::vector<Interval>& iv) {
    iv.erase(std::remove_if(iv.begin(), iv.end(),
                            [](const Interval& i) { return !(i.lo < i.hi); }),
             iv.end());
    if (iv.size() <= 1) return;
    // endpoint sweep; at equal values a closing endpoint is handled first so
    // that a shared endpoint stays a single-point gap
    std::vector<std::pair<double, int>> ev;
    ev.reserve(2 * iv.size());
    for (const Interval& i : iv) {
        ev.emplace_back(i.lo, 1);
        ev.emplace_back(i.hi, 0);
    }
    std::sort(ev.begin(), ev.end());
    iv.clear();
    int depth = 0;
    double open = 0.0;
    for (const auto& [x, isLeft] : ev) {
        if (isLeft) {
            if (depth++ == 0) open = x;
        } else {
            if (--depth == 0) iv.push_back({open, x});
        }
    }
}

IntervalSet interval_union(const std::vector<IntervalSet>& sets) {
    std::vector<Interval> scratch;
    size_t total = 0;
    for (const IntervalSet& s : sets) total += s.intervals().size();
    scratch.reserve(total);
    for (const IntervalSet& s : sets)
        for (const Interval& i : s.intervals()) scratch.push_back(i);
    interval_union_inplace(scratch);
    return IntervalSet::from_sorted(std::move(scratch));
}

bool covers_reals(const std::vector<Interval>& sorted_disjoint) {
    return sorted_disjoint.size() == 1 && sorted_disjoint[0].lo == -kInf &&
           sorted_disjoint[0].hi == kInf;
}

bool covers_reals(const IntervalSet& s) {
    return covers_reals(s.intervals());
}

std::optional<double> complement_witness(const std::vector<Interval>& iv) {
    if (iv.empty()) return 0.0;
    if (iv[0].lo != -kInf) return iv[0].lo > 0.0 ? 0.5 * iv[0].lo : iv[0].lo - 1.0;
    if (iv.size() > 1) {
        // consecutive members of a canonical union always leave a gap:
        // either an open one or the shared endpoint itself
        double hi = iv[0].hi, lo = iv[1].lo;
        return hi < lo ? 0.5 * (hi + lo) : hi;
    }
    if (iv[0].hi != kInf) return iv[0].hi + 1.0;
    return std::nullopt;
}

std::optional<double> complement_witness(const IntervalSet& s) {
    return complement_witness(s.intervals());
}

}
