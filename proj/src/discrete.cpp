#include "phasecd/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasecd {

namespace {

void fill_root_cache(DiscreteWorkspace& ws, int m) {
    if (static_cast<int>(ws.roots.size()) == m) return;
    ws.roots.resize(m);
    ws.conj_roots.resize(m);
    for (int i = 0; i < m; ++i) {
        ws.roots[i] = unit_root(i, m);
        ws.conj_roots[i] = unit_root(-i, m);
    }
}

EntryProposal finish_discrete(const SolverState& st, int d, double theta, int best,
                              DiscreteWorkspace& ws) {
    const int cur = st.seq.index(d);
    const int m = st.seq.alphabet().m;
    EntryProposal prop;
    prop.index = cur;
    prop.phi = kTwoPi * cur / m;
    prop.u = st.x[d];
    prop.value = st.objective;
    if (best == cur) return prop;
    std::complex<double> u = ws.roots[best];
    candidate_rho(ws.ctx, u, ws.rho_cand);
    prop.index = best;
    prop.phi = kTwoPi * best / m;
    prop.u = u;
    prop.value = objective_from_rho(ws.rho_cand, theta);
    prop.improved = true;
    return prop;
}

}  // namespace

void lag_response_table(const CoordinateContext& ctx, int m, LagTable& out) {
    const int lags = static_cast<int>(ctx.a.size());
    out.lags = lags;
    out.m = m;
    out.v.resize(static_cast<size_t>(lags) * m);
    std::vector<std::complex<double>> w(m), w2(m);
    for (int i = 0; i < m; ++i) {
        w[i] = unit_root(i, m);
        w2[i] = unit_root(-i, m);
    }
    for (int k = 0; k < lags; ++k) {
        const std::complex<double> a = ctx.a[k], b = ctx.b[k], c = ctx.c[k];
        double* row = out.v.data() + static_cast<size_t>(k) * m;
        for (int i = 0; i < m; ++i) {
            std::complex<double> r = a * w[i] + b * w2[i] + c;
            row[i] = r.real() * r.real() + r.imag() * r.imag();
        }
    }
}

void isl_scores(const LagTable& t, std::vector<double>& out) {
    out.assign(t.m, 0.0);
    for (int k = 0; k < t.lags; ++k) {
        const double* row = t.v.data() + static_cast<size_t>(k) * t.m;
        for (int i = 0; i < t.m; ++i) out[i] += row[i];
    }
}

int argmin_with_snap(const std::vector<double>& scores, int cur) {
    double vmin = scores[0];
    for (double s : scores) vmin = std::min(vmin, s);
    const double tol = 1e-9 * (1.0 + vmin);
    if (scores[cur] <= vmin + tol) return cur;
    for (size_t i = 0; i < scores.size(); ++i)
        if (scores[i] <= vmin + tol) return static_cast<int>(i);
    return cur;
}

EntryProposal optimize_entry_discrete(const SolverState& st, int d, double theta,
                                      DiscreteWorkspace& ws) {
    const Alphabet& al = st.seq.alphabet();
    if (!al.is_discrete()) throw std::invalid_argument("discrete rule on continuous sequence");
    if (al.m == 2) return optimize_entry_binary(st, d, theta, ws);
    const int m = al.m;
    fill_root_cache(ws, m);
    build_context(st, d, ws.ctx);
    lag_response_table(ws.ctx, m, ws.table);
    isl_scores(ws.table, ws.sums);
    ws.scores.resize(m);
    for (int i = 0; i < m; ++i) {
        double peak = 0.0;
        for (int k = 0; k < ws.table.lags; ++k) peak = std::max(peak, ws.table.at(k, i));
        ws.scores[i] = theta * peak + (1.0 - theta) * ws.sums[i];
    }
    int best = argmin_with_snap(ws.scores, st.seq.index(d));
    return finish_discrete(st, d, theta, best, ws);
}

EntryProposal optimize_entry_binary(const SolverState& st, int d, double theta,
                                    DiscreteWorkspace& ws) {
    const Alphabet& al = st.seq.alphabet();
    if (!al.is_discrete() || al.m != 2)
        throw std::invalid_argument("binary rule needs a two-phase alphabet");
    fill_root_cache(ws, 2);
    build_context(st, d, ws.ctx);
    const int lags = static_cast<int>(ws.ctx.a.size());
    double peak0 = 0.0, peak1 = 0.0, sum0 = 0.0, sum1 = 0.0;
    for (int k = 0; k < lags; ++k) {
        const double ab = ws.ctx.a[k].real() + ws.ctx.b[k].real();
        const double cc = ws.ctx.c[k].real();
        const double v0 = (cc + ab) * (cc + ab);
        const double v1 = (cc - ab) * (cc - ab);
        peak0 = std::max(peak0, v0);
        peak1 = std::max(peak1, v1);
        sum0 += v0;
        sum1 += v1;
    }
    ws.scores.assign(2, 0.0);
    ws.scores[0] = theta * peak0 + (1.0 - theta) * sum0;
    ws.scores[1] = theta * peak1 + (1.0 - theta) * sum1;
    int best = argmin_with_snap(ws.scores, st.seq.index(d));
    return finish_discrete(st, d, theta, best, ws);
}

}
