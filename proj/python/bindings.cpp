#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phasecd/driver.hpp"
#include "phasecd/generators.hpp"
#include "phasecd/io.hpp"
#include "phasecd/metrics.hpp"
#include "phasecd/sequence.hpp"

namespace py = pybind11;
using namespace phasecd;

namespace {

Alphabet alphabet_of(int m) {
    return m == 0 ? Alphabet::continuous() : Alphabet::discrete(m);
}

StartKind kind_of(const std::string& name) {
    if (name == "frank") return StartKind::Frank;
    if (name == "golomb") return StartKind::Golomb;
    if (name == "random") return StartKind::Random;
    if (name == "binary-random") return StartKind::BinaryRandom;
    throw std::invalid_argument("unknown start kind: " + name);
}

std::vector<StartSpec> starts_of(const std::vector<std::pair<std::string, std::uint64_t>>& raw) {
    std::vector<StartSpec> out;
    out.reserve(raw.size());
    for (const auto& [kind, seed] : raw) out.push_back({kind_of(kind), seed});
    return out;
}

py::dict sequence_dict(const PhaseSequence& seq) {
    py::dict d;
    d["n"] = seq.size();
    d["m"] = seq.alphabet().is_discrete() ? seq.alphabet().m : 0;
    d["phases"] = seq.phase_values();
    if (seq.alphabet().is_discrete()) d["indices"] = seq.indices();
    return d;
}

py::dict start_report_dict(const StartReport& r, bool with_trace) {
    py::dict d;
    d["kind"] = std::string(start_kind_name(r.start.kind));
    d["seed"] = r.start.seed;
    d["sequence"] = sequence_dict(r.seq);
    d["objective"] = r.objective;
    d["psl"] = r.psl;
    d["isl"] = r.isl;
    d["sweeps"] = r.sweeps;
    d["iterations"] = r.iterations;
    if (with_trace) {
        py::list trace;
        for (const TracePoint& t : r.trace)
            trace.append(py::make_tuple(t.iteration, t.objective, t.psl, t.isl));
        d["trace"] = std::move(trace);
    }
    return d;
}

DesignConfig make_config(int n, int m, double theta,
                         const std::vector<std::pair<std::string, std::uint64_t>>& starts,
                         double eps, double eps1, const std::string& rule, int max_sweeps,
                         int lp_init, int threads) {
    DesignConfig cfg;
    cfg.n = n;
    cfg.alphabet = alphabet_of(m);
    cfg.theta = theta;
    cfg.eps = eps;
    cfg.eps1 = eps1;
    if (rule == "cyclic")
        cfg.rule = CoordinateRule::Cyclic;
    else if (rule == "mbi-refine")
        cfg.rule = CoordinateRule::MbiRefine;
    else
        throw std::invalid_argument("rule must be 'cyclic' or 'mbi-refine'");
    cfg.max_sweeps = max_sweeps;
    cfg.starts = starts_of(starts);
    cfg.lp_init = lp_init < 0 ? theta > 0.0 : lp_init != 0;
    if (cfg.lp_init) cfg.lp = default_lp_schedule();
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_phasecd, mod) {
    mod.doc() = "constant-modulus sequence design by coordinate descent";

    py::class_<PhaseSequence>(mod, "PhaseSequence")
        .def_static("continuous", &PhaseSequence::continuous, py::arg("phases"))
        .def_static("discrete", &PhaseSequence::discrete, py::arg("indices"), py::arg("m"))
        .def("__len__", &PhaseSequence::size)
        .def_property_readonly("n", &PhaseSequence::size)
        .def_property_readonly("m", [](const PhaseSequence& s) {
            return s.alphabet().is_discrete() ? s.alphabet().m : 0;
        })
        .def("phases", &PhaseSequence::phase_values)
        .def("indices",
             [](const PhaseSequence& s) { return std::vector<int>(s.indices()); })
        .def("entries",
             [](const PhaseSequence& s) {
                 std::vector<std::complex<double>> out(s.size());
                 for (int i = 0; i < s.size(); ++i) out[i] = s.entry(i);
                 return out;
             })
        .def("__eq__", [](const PhaseSequence& a, const PhaseSequence& b) { return a == b; })
        .def("__repr__", [](const PhaseSequence& s) {
            return "PhaseSequence(n=" + std::to_string(s.size()) + ", m=" +
                   (s.alphabet().is_discrete() ? std::to_string(s.alphabet().m)
                                               : std::string("0")) +
                   ")";
        });

    mod.def(
        "generate",
        [](const std::string& kind, int n, int m, std::uint64_t seed) {
            return generate(kind_of(kind), n, alphabet_of(m), seed);
        },
        py::arg("kind"), py::arg("n"), py::arg("m") = 0, py::arg("seed") = 0,
        "classic or random starting sequence; m = 0 means continuous phases");

    mod.def(
        "autocorrelation",
        [](const PhaseSequence& seq) {
            auto acf = autocorrelation(seq);
            return py::make_tuple(acf.r0, acf.r);
        },
        py::arg("seq"), "mainlobe value and the positive-lag autocorrelation");

    mod.def("psl", [](const PhaseSequence& s) { return psl(autocorrelation(s)); },
            py::arg("seq"));
    mod.def("isl", [](const PhaseSequence& s) { return isl(autocorrelation(s)); },
            py::arg("seq"));
    mod.def("objective", &objective_value, py::arg("seq"), py::arg("theta"),
            "theta-weighted worst-lag objective: 1 = squared peak, 0 = integrated");
    mod.def("psl_db", &psl_db, py::arg("psl"), py::arg("n"));
    mod.def("isl_db", &isl_db, py::arg("isl"), py::arg("n"));

    mod.def(
        "design",
        [](int n, int m, double theta,
           const std::vector<std::pair<std::string, std::uint64_t>>& starts, double eps,
           double eps1, const std::string& rule, int max_sweeps, int lp_init, int threads,
           bool trace) {
            DesignConfig cfg = make_config(n, m, theta, starts, eps, eps1, rule,
                                           max_sweeps, lp_init, threads);
            DesignReport rep;
            {
                py::gil_scoped_release release;
                rep = multi_start(cfg);
            }
            py::dict out;
            out["best_index"] = rep.best_index;
            out["wall_time_s"] = rep.wall_time_s;
            out["best"] = start_report_dict(rep.starts[rep.best_index], trace);
            py::list all;
            for (const StartReport& r : rep.starts) all.append(start_report_dict(r, false));
            out["starts"] = std::move(all);
            return out;
        },
        py::arg("n"), py::arg("m") = 0, py::arg("theta") = 1.0,
        py::arg("starts") = std::vector<std::pair<std::string, std::uint64_t>>{{"random", 1}},
        py::arg("eps") = 1e-5, py::arg("eps1") = 1e-6, py::arg("rule") = "cyclic",
        py::arg("max_sweeps") = 1000, py::arg("lp_init") = -1, py::arg("threads") = 0,
        py::arg("trace") = false,
        "multi-start coordinate descent; lp_init -1 enables the surrogate stage "
        "whenever theta > 0");

    mod.def(
        "pareto",
        [](int n, int m, const std::vector<double>& thetas,
           const std::vector<std::pair<std::string, std::uint64_t>>& starts, double eps,
           double eps1, int max_sweeps, int lp_init, int threads) {
            DesignConfig cfg = make_config(n, m, thetas.empty() ? 1.0 : thetas.front(),
                                           starts, eps, eps1, "cyclic", max_sweeps,
                                           lp_init, threads);
            std::vector<ParetoPoint> points;
            {
                py::gil_scoped_release release;
                points = pareto_sweep(cfg, thetas);
            }
            py::list out;
            for (const ParetoPoint& p : points) {
                py::dict d;
                d["theta"] = p.theta;
                d["sequence"] = sequence_dict(p.seq);
                d["psl"] = p.psl;
                d["isl"] = p.isl;
                d["psl_db"] = psl_db(p.psl, n);
                d["isl_db"] = isl_db(p.isl, n);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("n"), py::arg("m") = 0,
        py::arg("thetas") = std::vector<double>{1.0, 0.8, 0.6, 0.4, 0.2, 0.0},
        py::arg("starts") = std::vector<std::pair<std::string, std::uint64_t>>{{"random", 1}},
        py::arg("eps") = 1e-5, py::arg("eps1") = 1e-6, py::arg("max_sweeps") = 1000,
        py::arg("lp_init") = -1, py::arg("threads") = 0,
        "trade-off sweep over strictly decreasing theta levels");

    mod.def("save_sequence",
            [](const PhaseSequence& seq, const std::string& path) { save_sequence(seq, path); },
            py::arg("seq"), py::arg("path"));
    mod.def("load_sequence", &load_sequence, py::arg("path"));
    mod.def("sequence_to_json", [](const PhaseSequence& s) { return sequence_to_json_text(s); },
            py::arg("seq"));
    mod.def("sequence_from_json", &sequence_from_json_text, py::arg("text"));

    mod.attr("__version__") = "0.1.0";
}
