#pragma once

#include <cstdint>
#include <vector>

#include "phasecd/continuous.hpp"
#include "phasecd/discrete.hpp"
#include "phasecd/generators.hpp"
#include "phasecd/lp_init.hpp"
#include "phasecd/metrics.hpp"
#include "phasecd/sequence.hpp"
#include "phasecd/solver.hpp"

namespace phasecd {

enum class CoordinateRule {
    Cyclic,     // entries in order until a full sweep gains less than eps
    MbiRefine,  // cyclic phase, then best-entry moves until exhausted
};

struct StartSpec {
    StartKind kind = StartKind::Random;
    std::uint64_t seed = 0;
};

struct DesignConfig {
    int n = 0;
    Alphabet alphabet;
    double theta = 1.0;
    double eps = 1e-5;    // stop when a full sweep improves less than this
    double eps1 = 1e-6;   // bisection width for the continuous entry rule
    CoordinateRule rule = CoordinateRule::Cyclic;
    int max_sweeps = 1000;
    std::vector<StartSpec> starts;
    bool lp_init = false;
    LpSchedule lp;
    int threads = 0;  // 0: PHASECD_THREADS env, then hardware count
};

struct TracePoint {
    long long iteration = 0;
    double objective = 0.0;
    double psl = 0.0;
    double isl = 0.0;
};

struct StartReport {
    StartSpec start;
    PhaseSequence seq;
    std::vector<TracePoint> trace;
    double objective = 0.0;  // recomputed from seq, not the incremental cache
    double psl = 0.0;
    double isl = 0.0;
    int sweeps = 0;
    long long iterations = 0;
};

struct DesignReport {
    std::vector<StartReport> starts;
    int best_index = 0;
    double wall_time_s = 0.0;
};

// one descent from the given sequence; trace rows are appended per coordinate
// visit and carry the incrementally maintained objective, which never
// increases because moves are only accepted on a strict decrease
StartReport cd_run(const DesignConfig& cfg, const PhaseSequence& init,
                   const StartSpec& tag);

// evaluates every entry and applies the single best strictly improving move;
// returns the moved coordinate, or -1 when no move gains at least min_gain
int mbi_step(SolverState& st, double theta, double eps1, double min_gain,
             ContinuousWorkspace& cws, DiscreteWorkspace& dws);

// independent descents from each start, in parallel; best by objective with
// ties broken toward the earlier start
DesignReport multi_start(const DesignConfig& cfg);

struct ParetoPoint {
    double theta = 0.0;
    PhaseSequence seq;
    double psl = 0.0;
    double isl = 0.0;
};

// trade-off sweep over strictly decreasing theta values: the first level runs
// the configured multi-start, each later level descends from the previous
// solution with the surrogate stage disabled; each reported point is the
// candidate from the whole chain that minimizes its level's objective, which
// keeps psl weakly increasing and isl weakly decreasing along the sweep
std::vector<ParetoPoint> pareto_sweep(const DesignConfig& cfg,
                                      const std::vector<double>& thetas);

int resolve_threads(int requested);

}
