#include "phasecd/driver.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace phasecd {

namespace {

struct RunScratch {
    ContinuousWorkspace cont;
    DiscreteWorkspace disc;
    LpWorkspace lp;
};

EntryProposal dispatch_entry(const SolverState& st, int d, const DesignConfig& cfg,
                             RunScratch& ws) {
    const Alphabet& al = st.seq.alphabet();
    if (!al.is_discrete())
        return optimize_entry_continuous(st, d, cfg.theta, cfg.eps1, ws.cont);
    if (al.m == 2) return optimize_entry_binary(st, d, cfg.theta, ws.disc);
    return optimize_entry_discrete(st, d, cfg.theta, ws.disc);
}

void push_trace(std::vector<TracePoint>& trace, long long it, const SolverState& st) {
    double psl_v, isl_v;
    rho_metrics(st.rho, psl_v, isl_v);
    trace.push_back({it, st.objective, psl_v, isl_v});
}

void validate_config(const DesignConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("design length must be at least 2");
    if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0))
        throw std::invalid_argument("theta must lie in [0, 1]");
    if (cfg.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be positive");
}

}  // namespace

StartReport cd_run(const DesignConfig& cfg, const PhaseSequence& init,
                   const StartSpec& tag) {
    validate_config(cfg);
    if (init.alphabet() != cfg.alphabet)
        throw std::invalid_argument("start sequence alphabet does not match the design");
    if (init.size() != cfg.n)
        throw std::invalid_argument("start sequence length does not match the design");

    SolverState st = make_state(init, cfg.theta);
    RunScratch ws;
    if (cfg.lp_init) run_lp_schedule(st, cfg.lp, cfg.theta, ws.lp);

    StartReport rep{tag, st.seq, {}, 0.0, 0.0, 0.0, 0, 0};
    long long it = 0;
    push_trace(rep.trace, it, st);

    const int n = cfg.n;
    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        const double before = st.objective;
        for (int d = 0; d < n; ++d) {
            EntryProposal prop = dispatch_entry(st, d, cfg, ws);
            if (prop.improved) apply_proposal(st, prop, d, cfg.theta);
            push_trace(rep.trace, ++it, st);
        }
        ++rep.sweeps;
        if (before - st.objective < cfg.eps) break;
    }

    if (cfg.rule == CoordinateRule::MbiRefine) {
        const long long cap = 10LL * n;
        for (long long step = 0; step < cap; ++step) {
            int moved = mbi_step(st, cfg.theta, cfg.eps1, cfg.eps, ws.cont, ws.disc);
            if (moved < 0) break;
            push_trace(rep.trace, ++it, st);
        }
    }

    rep.iterations = it;
    rep.seq = st.seq;
    const AutocorrVector acf = autocorrelation(st.seq);
    rep.psl = psl(acf);
    rep.isl = isl(acf);
    rep.objective = objective_value(st.seq, cfg.theta);
    return rep;
}

int mbi_step(SolverState& st, double theta, double eps1, double min_gain,
             ContinuousWorkspace& cws, DiscreteWorkspace& dws) {
    const Alphabet& al = st.seq.alphabet();
    const int n = st.seq.size();
    int bestD = -1;
    EntryProposal best;
    for (int d = 0; d < n; ++d) {
        EntryProposal prop;
        if (!al.is_discrete())
            prop = optimize_entry_continuous(st, d, theta, eps1, cws);
        else if (al.m == 2)
            prop = optimize_entry_binary(st, d, theta, dws);
        else
            prop = optimize_entry_discrete(st, d, theta, dws);
        if (!prop.improved) continue;
        if (bestD < 0 || prop.value < best.value) {
            bestD = d;
            best = prop;
        }
    }
    if (bestD < 0 || st.objective - best.value < min_gain) return -1;
    apply_proposal(st, best, bestD, theta);
    return bestD;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PHASECD_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

DesignReport multi_start(const DesignConfig& cfg) {
    validate_config(cfg);
    if (cfg.starts.empty()) throw std::invalid_argument("no starts configured");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<PhaseSequence> inits;
    inits.reserve(cfg.starts.size());
    for (const StartSpec& s : cfg.starts)
        inits.push_back(generate(s.kind, cfg.n, cfg.alphabet, s.seed));

    const int count = static_cast<int>(cfg.starts.size());
    std::vector<StartReport> reports;
    reports.reserve(count);
    for (int i = 0; i < count; ++i)
        reports.push_back(StartReport{cfg.starts[i], inits[i], {}, 0.0, 0.0, 0.0, 0, 0});

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            reports[i] = cd_run(cfg, inits[i], cfg.starts[i]);
        }
    };
    const int threads = std::min(resolve_threads(cfg.threads), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    DesignReport out{std::move(reports), 0, 0.0};
    for (int i = 1; i < count; ++i)
        if (out.starts[i].objective < out.starts[out.best_index].objective)
            out.best_index = i;
    out.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<ParetoPoint> pareto_sweep(const DesignConfig& cfg,
                                      const std::vector<double>& thetas) {
    if (thetas.empty()) throw std::invalid_argument("theta list is empty");
    for (double t : thetas)
        if (t < 0.0 || t > 1.0) throw std::invalid_argument("theta must lie in [0, 1]");
    for (size_t i = 1; i < thetas.size(); ++i)
        if (!(thetas[i] < thetas[i - 1]))
            throw std::invalid_argument("theta values must decrease strictly");

    std::vector<ParetoPoint> chain;
    chain.reserve(thetas.size());

    DesignConfig first = cfg;
    first.theta = thetas[0];
    DesignReport rep = multi_start(first);
    const StartReport& best = rep.starts[rep.best_index];
    chain.push_back({thetas[0], best.seq, best.psl, best.isl});

    for (size_t i = 1; i < thetas.size(); ++i) {
        DesignConfig warm = cfg;
        warm.theta = thetas[i];
        warm.lp_init = false;
        StartReport r = cd_run(warm, chain.back().seq, {StartKind::Warm, 0});
        chain.push_back({thetas[i], r.seq, r.psl, r.isl});
    }

    // every level's descent output is a candidate for every level; reporting
    // the per-level argmin of theta*psl^2 + (1-theta)*isl over the shared pool
    // makes psl weakly increasing and isl weakly decreasing along the sweep
    std::vector<ParetoPoint> points;
    points.reserve(thetas.size());
    for (double theta : thetas) {
        size_t sel = 0;
        double selVal = 0.0;
        for (size_t i = 0; i < chain.size(); ++i) {
            double v = theta * chain[i].psl * chain[i].psl + (1.0 - theta) * chain[i].isl;
            if (i == 0 || v < selVal) {
                sel = i;
                selVal = v;
            }
        }
        points.push_back({theta, chain[sel].seq, chain[sel].psl, chain[sel].isl});
    }
    return points;
}

}
