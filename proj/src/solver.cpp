#include "phasecd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasecd {

namespace {

void fill_entries(const PhaseSequence& seq, std::vector<std::complex<double>>& x) {
    const int n = seq.size();
    x.resize(n);
    for (int i = 0; i < n; ++i) x[i] = seq.entry(i);
}

void fill_rho(const std::vector<std::complex<double>>& x,
              std::vector<std::complex<double>>& rho) {
    const int n = static_cast<int>(x.size());
    rho.assign(n - 1, {0.0, 0.0});
    for (int k = 1; k < n; ++k) {
        std::complex<double> s{0.0, 0.0};
        for (int i = 0; i + k < n; ++i) s += x[i] * std::conj(x[i + k]);
        rho[k - 1] = s;
    }
}

}  // namespace

SolverState make_state(const PhaseSequence& seq, double theta) {
    SolverState st{seq, {}, {}, 0.0};
    refresh_state(st, theta);
    return st;
}

void refresh_state(SolverState& st, double theta) {
    fill_entries(st.seq, st.x);
    fill_rho(st.x, st.rho);
    st.objective = objective_from_rho(st.rho, theta);
}

double max_rho_drift(const SolverState& st) {
    std::vector<std::complex<double>> fresh;
    fill_rho(st.x, fresh);
    double worst = 0.0;
    for (size_t k = 0; k < fresh.size(); ++k) {
        double num = std::abs(st.rho[k] - fresh[k]);
        double den = 1.0 + std::abs(fresh[k]);
        worst = std::max(worst, num / den);
    }
    return worst;
}

void build_context(const SolverState& st, int d, CoordinateContext& ctx) {
    const int n = static_cast<int>(st.x.size());
    if (d < 0 || d >= n) throw std::invalid_argument("coordinate index out of range");
    ctx.d = d;
    ctx.a.resize(n - 1);
    ctx.b.resize(n - 1);
    ctx.c.resize(n - 1);
    const std::complex<double> xd = st.x[d];
    const std::complex<double> xdc = std::conj(xd);
    for (int k = 1; k < n; ++k) {
        std::complex<double> a = (d + k < n) ? std::conj(st.x[d + k]) : std::complex<double>{};
        std::complex<double> b = (d - k >= 0) ? st.x[d - k] : std::complex<double>{};
        ctx.a[k - 1] = a;
        ctx.b[k - 1] = b;
        ctx.c[k - 1] = st.rho[k - 1] - a * xd - b * xdc;
    }
}

CoordinateContext build_context(const SolverState& st, int d) {
    CoordinateContext ctx;
    build_context(st, d, ctx);
    return ctx;
}

void candidate_rho(const CoordinateContext& ctx, std::complex<double> u,
                   std::vector<std::complex<double>>& out) {
    const size_t m = ctx.a.size();
    out.resize(m);
    const std::complex<double> uc = std::conj(u);
    for (size_t k = 0; k < m; ++k) out[k] = ctx.a[k] * u + ctx.b[k] * uc + ctx.c[k];
}

double objective_from_rho(const std::vector<std::complex<double>>& rho, double theta) {
    std::vector<double> sq(rho.size());
    for (size_t k = 0; k < rho.size(); ++k) {
        double re = rho[k].real(), im = rho[k].imag();
        sq[k] = re * re + im * im;
    }
    return minmax_objective(sq, theta);
}

void rho_metrics(const std::vector<std::complex<double>>& rho, double& psl_out,
                 double& isl_out) {
    double peak = 0.0, total = 0.0;
    for (const auto& r : rho) {
        double re = r.real(), im = r.imag();
        double sq = re * re + im * im;
        peak = std::max(peak, sq);
        total += sq;
    }
    psl_out = std::sqrt(peak);
    isl_out = total;
}

void apply_proposal(SolverState& st, const EntryProposal& prop, int d, double theta) {
    CoordinateContext ctx;
    build_context(st, d, ctx);
    std::vector<std::complex<double>> fresh;
    candidate_rho(ctx, prop.u, fresh);
    if (st.seq.alphabet().is_discrete())
        st.seq.set_index(d, prop.index);
    else
        st.seq.set_phase(d, wrap_phase(prop.phi));
    st.x[d] = prop.u;
    st.rho = std::move(fresh);
    st.objective = objective_from_rho(st.rho, theta);
}

}
