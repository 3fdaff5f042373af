#include "phasecd/lp_init.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasecd {

namespace {

// curvature and slope of the scalar majorizer of y^p at y0 on [0, 1]
void majorizer_terms(double y0, double p, double& g, double& h) {
    const double u = 1.0 - y0;
    if (u < 1e-6) {
        // expansion around y0 = 1; the closed form loses all digits there
        g = 0.5 * p * (p - 1.0) * (1.0 - 2.0 * (p - 2.0) * u / 3.0);
    } else {
        const double yp1 = std::pow(y0, p - 1.0);
        g = (1.0 - y0 * yp1 - p * yp1 * u) / (u * u);
    }
    h = p * std::pow(y0, p - 1.0) - 2.0 * g * y0;
}

double surrogate_value(const SurrogateWeights& w, const std::vector<std::complex<double>>& rho) {
    double s = 0.0;
    for (size_t k = 0; k < rho.size(); ++k) {
        double re = rho[k].real(), im = rho[k].imag();
        double sq = re * re + im * im;
        s += w.tau[k] * sq + w.lambda[k] * std::sqrt(sq);
    }
    return s;
}

}  // namespace

double lp_norm(const std::vector<double>& xs, double p) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, x);
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double x : xs) s += std::pow(x / m, p);
    return m * std::pow(s, 1.0 / p);
}

void surrogate_weights(const std::vector<double>& lag_abs, double p,
                       SurrogateWeights& out) {
    const size_t n = lag_abs.size();
    out.tau.resize(n);
    out.lambda.resize(n);
    out.p = p;
    out.t = lp_norm(lag_abs, p);
    out.plain_quadratic = (p == 2.0);
    if (out.plain_quadratic) {
        std::fill(out.tau.begin(), out.tau.end(), 1.0);
        std::fill(out.lambda.begin(), out.lambda.end(), 0.0);
        return;
    }
    const double t = out.t > 0.0 ? out.t : 1.0;
    double gmax = 0.0;
    for (size_t k = 0; k < n; ++k) {
        double g, h;
        majorizer_terms(lag_abs[k] / t, p, g, h);
        out.tau[k] = g;
        out.lambda[k] = t * h;
        gmax = std::max(gmax, g);
    }
    const double inv = 1.0 / gmax;
    for (size_t k = 0; k < n; ++k) {
        out.tau[k] *= inv;
        out.lambda[k] *= inv;
    }
}

QuarticPoly phase_match_quartic(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c, std::complex<double> rho_hat) {
    const std::complex<double> at = std::conj(a) * rho_hat;
    const std::complex<double> bt = std::conj(b) * rho_hat;
    const std::complex<double> ct = std::conj(c) * rho_hat;
    const double D = ct.real() - at.real() - bt.real();
    const double E = 2.0 * (at.imag() - bt.imag());
    const double F = at.real() + bt.real() + ct.real();
    QuarticPoly q;
    q.c[0] = D;
    q.c[1] = E;
    q.c[2] = D + F;
    q.c[3] = E;
    q.c[4] = F;
    return q;
}

EntryProposal optimize_entry_lp_continuous(const SolverState& st, int d,
                                           const SurrogateWeights& w, LpWorkspace& ws) {
    ContinuousWorkspace& cw = ws.cont;
    build_context(st, d, cw.ctx);
    const size_t lags = cw.ctx.a.size();
    cw.lag.resize(lags);
    ws.hq.resize(lags);
    QuarticPoly n;
    for (size_t k = 0; k < lags; ++k) {
        cw.lag[k] = phase_power_quartic(cw.ctx.a[k], cw.ctx.b[k], cw.ctx.c[k]);
        double mag = std::abs(st.rho[k]);
        std::complex<double> hat = mag > 0.0 ? st.rho[k] / mag : std::complex<double>{1.0, 0.0};
        ws.hq[k] = phase_match_quartic(cw.ctx.a[k], cw.ctx.b[k], cw.ctx.c[k], hat);
        for (int i = 0; i < 5; ++i)
            n.c[i] += w.tau[k] * cw.lag[k].c[i] + w.lambda[k] * ws.hq[k].c[i];
    }

    EntryProposal prop;
    prop.phi = st.seq.phase(d);
    prop.u = st.x[d];
    candidate_rho(cw.ctx, prop.u, cw.rho_cand);
    double bestScore = surrogate_value(w, cw.rho_cand);
    prop.value = bestScore;

    // stationary points of n(beta) / (1 + beta^2)^2
    QuarticPoly s;
    s.c[0] = -n.c[1];
    s.c[1] = 4.0 * n.c[0] - 2.0 * n.c[2];
    s.c[2] = 3.0 * (n.c[1] - n.c[3]);
    s.c[3] = 2.0 * n.c[2] - 4.0 * n.c[4];
    s.c[4] = n.c[3];
    if (s.max_abs_coeff() <= 1e-13 * (1.0 + n.max_abs_coeff())) return prop;

    auto consider = [&](double phi) {
        std::complex<double> u = unit_phase(phi);
        candidate_rho(cw.ctx, u, cw.rho_cand);
        double score = surrogate_value(w, cw.rho_cand);
        if (score < bestScore) {
            bestScore = score;
            prop.phi = phi;
            prop.u = u;
            prop.value = score;
            prop.improved = true;
        }
    };
    for (double beta : real_roots(s)) consider(wrap_phase(2.0 * std::atan(beta)));
    consider(kPi);
    return prop;
}

EntryProposal optimize_entry_lp_discrete(const SolverState& st, int d,
                                         const SurrogateWeights& w, LpWorkspace& ws) {
    DiscreteWorkspace& dw = ws.disc;
    const int m = st.seq.alphabet().m;
    build_context(st, d, dw.ctx);
    lag_response_table(dw.ctx, m, dw.table);
    if (w.plain_quadratic) {
        isl_scores(dw.table, dw.scores);
    } else {
        dw.scores.assign(m, 0.0);
        for (int k = 0; k < dw.table.lags; ++k) {
            const double* row = dw.table.v.data() + static_cast<size_t>(k) * m;
            for (int i = 0; i < m; ++i)
                dw.scores[i] += w.tau[k] * row[i] + w.lambda[k] * std::sqrt(row[i]);
        }
    }
    const int cur = st.seq.index(d);
    int best = argmin_with_snap(dw.scores, cur);
    EntryProposal prop;
    prop.index = cur;
    prop.phi = kTwoPi * cur / m;
    prop.u = st.x[d];
    prop.value = dw.scores[cur];
    if (best == cur) return prop;
    prop.index = best;
    prop.phi = kTwoPi * best / m;
    prop.u = unit_root(best, m);
    prop.value = dw.scores[best];
    prop.improved = true;
    return prop;
}

LpSchedule default_lp_schedule() {
    LpSchedule s;
    for (double p = 2.0; p <= 8192.0; p *= 2.0) s.powers.push_back(p);
    return s;
}

LpRunInfo run_lp_schedule(SolverState& st, const LpSchedule& schedule, double theta,
                          LpWorkspace& ws) {
    const int n = st.seq.size();
    const bool discrete = st.seq.alphabet().is_discrete();
    LpRunInfo info;
    auto current_level = [&](double p) {
        ws.lag_abs.resize(st.rho.size());
        for (size_t k = 0; k < st.rho.size(); ++k) ws.lag_abs[k] = std::abs(st.rho[k]);
        return lp_norm(ws.lag_abs, p);
    };
    for (double p : schedule.powers) {
        double prev = current_level(p);
        for (int sweep = 0; sweep < schedule.max_sweeps; ++sweep) {
            for (int d = 0; d < n; ++d) {
                ws.lag_abs.resize(st.rho.size());
                for (size_t k = 0; k < st.rho.size(); ++k)
                    ws.lag_abs[k] = std::abs(st.rho[k]);
                surrogate_weights(ws.lag_abs, p, ws.w);
                EntryProposal prop = discrete
                                         ? optimize_entry_lp_discrete(st, d, ws.w, ws)
                                         : optimize_entry_lp_continuous(st, d, ws.w, ws);
                if (prop.improved) apply_proposal(st, prop, d, theta);
            }
            ++info.sweeps;
            double level = current_level(p);
            double delta = prev - level;
            prev = level;
            if (std::abs(delta) < schedule.inner_eps) break;
        }
        ++info.stages;
        info.final_level = prev;
    }
    return info;
}

}
