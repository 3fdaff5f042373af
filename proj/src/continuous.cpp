#include "phasecd/continuous.hpp"

#include <algorithm>
#include <cmath>

namespace phasecd {

QuarticPoly phase_power_quartic(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c) {
    // p(beta) = (A1 b^2 + B1 b + C1)^2 + (A2 b^2 + B2 b + C2)^2, the squared
    // real and imaginary parts of (1 + beta^2) r~(phi(beta))
    const double ar = a.real(), ai = a.imag();
    const double br = b.real(), bi = b.imag();
    const double cr = c.real(), ci = c.imag();
    const double A1 = cr - (ar + br), B1 = 2.0 * (bi - ai), C1 = ar + br + cr;
    const double A2 = ci - (ai + bi), B2 = 2.0 * (ar - br), C2 = ai + bi + ci;
    QuarticPoly p;
    p.c[0] = A1 * A1 + A2 * A2;
    p.c[1] = 2.0 * (A1 * B1 + A2 * B2);
    p.c[2] = B1 * B1 + B2 * B2 + 2.0 * (A1 * C1 + A2 * C2);
    p.c[3] = 2.0 * (B1 * C1 + B2 * C2);
    p.c[4] = C1 * C1 + C2 * C2;
    return p;
}

std::vector<QuarticPoly> combine_lag_quartics(const std::vector<QuarticPoly>& lag,
                                              double theta) {
    QuarticPoly sum;
    for (const QuarticPoly& p : lag)
        for (int i = 0; i < 5; ++i) sum.c[i] += p.c[i];
    std::vector<QuarticPoly> combined(lag.size());
    for (size_t k = 0; k < lag.size(); ++k)
        for (int i = 0; i < 5; ++i)
            combined[k].c[i] = theta * lag[k].c[i] + (1.0 - theta) * sum.c[i];
    return combined;
}

FeasibilityOutcome feasibility_check(const std::vector<QuarticPoly>& combined,
                                     double gamma_bar, FeasibilityScratch& scratch) {
    scratch.iv.clear();
    double pi_level = 0.0;
    for (const QuarticPoly& q : combined) {
        pi_level = std::max(pi_level, q.c[0]);
        QuarticPoly bar = q;
        bar.c[0] -= gamma_bar;
        bar.c[2] -= 2.0 * gamma_bar;
        bar.c[4] -= gamma_bar;
        // cancellation can leave pure noise; an all-noise polynomial marks the
        // whole chart as boundary for this lag and excludes nothing
        double noise = 1e-13 * (1.0 + q.max_abs_coeff() + 2.0 * std::abs(gamma_bar));
        if (bar.max_abs_coeff() <= noise) continue;
        append_positive_intervals(bar, scratch.iv);
    }
    interval_union_inplace(scratch.iv);
    FeasibilityOutcome out;
    if (!covers_reals(scratch.iv)) {
        out.feasible = true;
        out.beta = *complement_witness(scratch.iv);
        return out;
    }
    if (pi_level <= gamma_bar) {
        out.feasible = true;
        out.at_pi = true;
    }
    return out;
}

EntryProposal optimize_entry_continuous(const SolverState& st, int d, double theta,
                                        double eps1, ContinuousWorkspace& ws) {
    build_context(st, d, ws.ctx);
    const size_t lags = ws.ctx.a.size();
    ws.lag.resize(lags);
    for (size_t k = 0; k < lags; ++k)
        ws.lag[k] = phase_power_quartic(ws.ctx.a[k], ws.ctx.b[k], ws.ctx.c[k]);
    ws.combined = combine_lag_quartics(ws.lag, theta);

    const double u0 = st.objective;
    double w = 0.0, u = u0;
    bool haveWitness = false, witnessPi = false;
    double witnessBeta = 0.0;
    int iters = 0;
    while (u - w > eps1) {
        double gamma = 0.5 * (u + w);
        FeasibilityOutcome fo = feasibility_check(ws.combined, gamma, ws.scratch);
        if (fo.feasible) {
            u = gamma;
            haveWitness = true;
            witnessPi = fo.at_pi;
            witnessBeta = fo.beta;
        } else {
            w = gamma;
        }
        ++iters;
    }

    EntryProposal prop;
    prop.phi = st.seq.phase(d);
    prop.u = st.x[d];
    prop.value = u0;
    prop.iterations = iters;
    if (!haveWitness) return prop;

    double phi = witnessPi ? kPi : wrap_phase(2.0 * std::atan(witnessBeta));
    std::complex<double> cand = unit_phase(phi);
    candidate_rho(ws.ctx, cand, ws.rho_cand);
    double fCand = objective_from_rho(ws.rho_cand, theta);
    if (fCand < u0) {
        prop.phi = phi;
        prop.u = cand;
        prop.value = fCand;
        prop.improved = true;
    }
    return prop;
}

}
