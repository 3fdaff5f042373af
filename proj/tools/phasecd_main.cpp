#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "phasecd/driver.hpp"
#include "phasecd/io.hpp"
#include "phasecd/metrics.hpp"
#include "phasecd/quartic.hpp"
#include "phasecd/rng.hpp"

namespace fs = std::filesystem;
using namespace phasecd;

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": not an integer: " + s);
    }
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": not a number: " + s);
    }
}

Alphabet parse_alphabet(const std::string& s) {
    if (s == "continuous") return Alphabet::continuous();
    if (s == "binary") return Alphabet::binary();
    if (s.rfind("m:", 0) == 0) {
        int m = parse_int(s.substr(2), "--alphabet m:<count>");
        return Alphabet::discrete(m);
    }
    throw std::invalid_argument("--alphabet must be continuous, binary, or m:<count>");
}

bool is_square(int n) {
    int r = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

std::vector<StartSpec> parse_starts(const std::string& spec, int n, std::uint64_t seed) {
    std::vector<StartSpec> starts;
    std::uint64_t stream = 0;
    auto add_random = [&](int count) {
        for (int i = 0; i < count; ++i)
            starts.push_back({StartKind::Random, Rng::derive(seed, stream++)});
    };
    for (const std::string& tok : split_list(spec)) {
        if (tok == "auto") {
            starts.push_back({StartKind::Golomb, 0});
            if (is_square(n)) starts.push_back({StartKind::Frank, 0});
            add_random(5);
        } else if (tok == "golomb") {
            starts.push_back({StartKind::Golomb, 0});
        } else if (tok == "frank") {
            starts.push_back({StartKind::Frank, 0});
        } else if (tok == "random") {
            add_random(1);
        } else if (tok.rfind("random:", 0) == 0) {
            add_random(parse_int(tok.substr(7), "--starts random:<count>"));
        } else {
            throw std::invalid_argument("--starts token not recognized: " + tok);
        }
    }
    if (starts.empty()) throw std::invalid_argument("--starts resolved to an empty list");
    return starts;
}

void apply_lp_flag(DesignConfig& cfg, const std::string& flag) {
    if (flag == "off") {
        cfg.lp_init = false;
        return;
    }
    if (flag == "on" || flag == "auto") {
        cfg.lp_init = (flag == "on") || cfg.theta > 0.0;
        cfg.lp = default_lp_schedule();
        return;
    }
    // an explicit comma list of increasing powers acts as a custom schedule
    LpSchedule sched;
    for (const std::string& tok : split_list(flag))
        sched.powers.push_back(parse_double(tok, "--lp-init power"));
    if (sched.powers.empty()) throw std::invalid_argument("--lp-init schedule is empty");
    for (size_t i = 0; i < sched.powers.size(); ++i) {
        if (sched.powers[i] < 2.0)
            throw std::invalid_argument("--lp-init powers must be at least 2");
        if (i > 0 && sched.powers[i] <= sched.powers[i - 1])
            throw std::invalid_argument("--lp-init powers must increase");
    }
    cfg.lp_init = true;
    cfg.lp = sched;
}

CoordinateRule parse_rule(const std::string& s) {
    if (s == "cyclic") return CoordinateRule::Cyclic;
    if (s == "mbi-refine") return CoordinateRule::MbiRefine;
    throw std::invalid_argument("--rule must be cyclic or mbi-refine");
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory: " + dir);
}

struct DesignFlags {
    int n = 0;
    std::string alphabet = "continuous";
    double theta = 1.0;
    std::string starts = "auto";
    std::uint64_t seed = 1;
    double eps = 1e-5;
    double eps1 = 1e-6;
    std::string lp_init = "auto";
    std::string rule = "cyclic";
    int max_sweeps = 1000;
    int threads = 0;
    std::string out_dir = ".";
};

void add_design_flags(CLI::App* cmd, DesignFlags& f, bool with_starts = true) {
    cmd->add_option("--n", f.n, "sequence length")->required();
    cmd->add_option("--alphabet", f.alphabet, "continuous, binary, or m:<count>");
    cmd->add_option("--theta", f.theta, "objective weight in [0,1]: 1 peak, 0 integrated");
    if (with_starts)
        cmd->add_option("--starts", f.starts,
                        "comma list of golomb, frank, random[:<k>], or auto");
    cmd->add_option("--seed", f.seed, "base seed for random starts");
    cmd->add_option("--eps", f.eps, "minimum per-sweep improvement to continue");
    cmd->add_option("--eps1", f.eps1, "bisection accuracy of the continuous entry rule");
    cmd->add_option("--lp-init", f.lp_init,
                    "on, off, auto, or a comma list of increasing powers");
    cmd->add_option("--rule", f.rule, "cyclic or mbi-refine");
    cmd->add_option("--max-sweeps", f.max_sweeps, "sweep cap per start");
    cmd->add_option("--threads", f.threads, "worker threads (0: PHASECD_THREADS or all)");
    cmd->add_option("--out-dir", f.out_dir, "directory for output files");
}

DesignConfig build_config(const DesignFlags& f, bool with_starts = true) {
    if (f.n < 2) throw std::invalid_argument("--n must be at least 2");
    if (f.theta < 0.0 || f.theta > 1.0) throw std::invalid_argument("--theta must lie in [0,1]");
    if (!(f.eps > 0.0)) throw std::invalid_argument("--eps must be positive");
    if (!(f.eps1 > 0.0)) throw std::invalid_argument("--eps1 must be positive");
    if (f.max_sweeps < 1) throw std::invalid_argument("--max-sweeps must be positive");
    DesignConfig cfg;
    cfg.n = f.n;
    cfg.alphabet = parse_alphabet(f.alphabet);
    cfg.theta = f.theta;
    cfg.eps = f.eps;
    cfg.eps1 = f.eps1;
    cfg.rule = parse_rule(f.rule);
    cfg.max_sweeps = f.max_sweeps;
    cfg.threads = f.threads;
    if (with_starts) cfg.starts = parse_starts(f.starts, f.n, f.seed);
    apply_lp_flag(cfg, f.lp_init);
    return cfg;
}

void print_metrics_line(const char* name, double linear, double db) {
    std::printf("%s: %.17g (%s_db: %.6f)\n", name, linear, name, db);
}

int cmd_design(const DesignFlags& f) {
    DesignConfig cfg = build_config(f);
    DesignReport rep = multi_start(cfg);
    const StartReport& best = rep.starts[rep.best_index];

    RunManifest manifest{"design", kVersion, config_echo_json(cfg)};
    const std::string hash = manifest.hash();
    ensure_out_dir(f.out_dir);
    const fs::path dir(f.out_dir);
    save_sequence(best.seq, (dir / "sequence.json").string(), hash);
    write_text_file((dir / "trace.csv").string(), trace_csv_text(rep, hash));
    write_text_file((dir / "report.json").string(), design_report_json(cfg, rep, manifest));

    std::printf("n: %d\nalphabet: %s\ntheta: %g\nbest start: %s (seed %llu)\n", cfg.n,
                alphabet_label(cfg.alphabet).c_str(), cfg.theta,
                start_kind_name(best.start.kind),
                static_cast<unsigned long long>(best.start.seed));
    print_metrics_line("psl", best.psl, psl_db(best.psl, cfg.n));
    print_metrics_line("isl", best.isl, isl_db(best.isl, cfg.n));
    std::printf("objective: %.17g\nsweeps: %d\niterations: %lld\nwall_time_s: %.3f\n",
                best.objective, best.sweeps, static_cast<long long>(best.iterations),
                rep.wall_time_s);
    std::printf("manifest: %s\nout: %s\n", hash.c_str(), fs::absolute(dir).string().c_str());
    return 0;
}

int cmd_evaluate(const std::string& path, const std::string& acf_path) {
    PhaseSequence seq = load_sequence(path);
    const AutocorrVector acf = autocorrelation(seq);
    const double p = psl(acf), e = isl(acf);
    std::printf("n: %d\nalphabet: %s\n", seq.size(), alphabet_label(seq.alphabet()).c_str());
    print_metrics_line("psl", p, psl_db(p, seq.size()));
    print_metrics_line("isl", e, isl_db(e, seq.size()));
    if (!acf_path.empty()) {
        RunManifest manifest{"evaluate", kVersion,
                             std::string("{\"input\":\"") + path + "\"}"};
        write_text_file(acf_path, acf_csv_text(seq, manifest.hash()));
        std::printf("acf: %s\n", acf_path.c_str());
    }
    return 0;
}

int cmd_pareto(const DesignFlags& f, const std::string& thetas_flag) {
    std::vector<double> thetas;
    for (const std::string& tok : split_list(thetas_flag))
        thetas.push_back(parse_double(tok, "--thetas"));
    DesignConfig cfg = build_config(f);
    std::vector<ParetoPoint> points = pareto_sweep(cfg, thetas);

    RunManifest manifest{"pareto", kVersion, config_echo_json(cfg)};
    const std::string hash = manifest.hash();
    ensure_out_dir(f.out_dir);
    const fs::path dir(f.out_dir);
    std::vector<ParetoRow> rows;
    for (size_t i = 0; i < points.size(); ++i) {
        const std::string name = "pareto_seq_" + std::to_string(i) + ".json";
        save_sequence(points[i].seq, (dir / name).string(), hash);
        rows.push_back({points[i].theta, psl_db(points[i].psl, cfg.n),
                        isl_db(points[i].isl, cfg.n), name});
    }
    write_text_file((dir / "pareto.csv").string(), pareto_csv_text(rows, hash));
    for (size_t i = 0; i < points.size(); ++i)
        std::printf("theta %.3f: psl_db %.3f isl_db %.3f (%s)\n", points[i].theta,
                    rows[i].psl_db, rows[i].isl_db, rows[i].sequence_path.c_str());
    std::printf("manifest: %s\nout: %s\n", hash.c_str(), fs::absolute(dir).string().c_str());
    return 0;
}

struct BenchFlags {
    DesignFlags d;
    std::string n_grid;
    std::string m_grid;
    std::string metric = "psl";
    int runs = 5;
};

int cmd_bench(const BenchFlags& bf) {
    if (bf.metric != "psl" && bf.metric != "isl")
        throw std::invalid_argument("--metric must be psl or isl");
    if (bf.runs < 1) throw std::invalid_argument("--runs must be positive");
    std::vector<int> ns, ms;
    for (const std::string& tok : split_list(bf.n_grid))
        ns.push_back(parse_int(tok, "--n-grid"));
    for (const std::string& tok : split_list(bf.m_grid))
        ms.push_back(parse_int(tok, "--m-grid"));
    if (ns.empty() && ms.empty())
        throw std::invalid_argument("bench grid is empty: pass --n-grid and/or --m-grid");
    if (ns.empty()) {
        if (bf.d.n < 2) throw std::invalid_argument("--n is required with --m-grid");
        ns.push_back(bf.d.n);
    }

    const double theta = bf.metric == "psl" ? 1.0 : 0.0;
    std::vector<BenchRow> rows;
    std::string config_echo;
    std::uint64_t cell = 0;
    for (int n : ns) {
        std::vector<Alphabet> alphabets;
        std::vector<std::string> labels;
        if (ms.empty()) {
            alphabets.push_back(parse_alphabet(bf.d.alphabet));
            labels.push_back(alphabet_label(alphabets.back()));
        } else {
            for (int m : ms) {
                alphabets.push_back(Alphabet::discrete(m));
                labels.push_back(alphabet_label(alphabets.back()));
            }
        }
        for (size_t a = 0; a < alphabets.size(); ++a) {
            DesignFlags df = bf.d;
            df.n = n;
            df.theta = theta;
            DesignConfig cfg = build_config(df, false);
            cfg.alphabet = alphabets[a];
            const std::uint64_t cell_seed = Rng::derive(bf.d.seed, cell++);
            for (int r = 0; r < bf.runs; ++r)
                cfg.starts.push_back({StartKind::Random, Rng::derive(cell_seed, r)});
            DesignReport rep = multi_start(cfg);
            const StartReport& best = rep.starts[rep.best_index];
            const double value = bf.metric == "psl" ? best.psl : best.isl;
            const double db = bf.metric == "psl" ? psl_db(value, n) : isl_db(value, n);
            rows.push_back({n, labels[a], bf.metric, bf.runs, value, db, cell_seed});
            if (config_echo.empty()) config_echo = config_echo_json(cfg);
            std::printf("n %d %s: %s %.17g (%.3f dB)\n", n, labels[a].c_str(),
                        bf.metric.c_str(), value, db);
        }
    }
    RunManifest manifest{"bench", kVersion, config_echo};
    ensure_out_dir(bf.d.out_dir);
    const fs::path out = fs::path(bf.d.out_dir) / "bench.csv";
    write_text_file(out.string(), bench_csv_text(rows, manifest.hash()));
    std::printf("manifest: %s\nout: %s\n", manifest.hash().c_str(),
                fs::absolute(out).string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "constant-modulus sequence design with low autocorrelation sidelobes\n"
        "reported dB levels are relative to the mainlobe: psl_db = 20*log10(psl/n),\n"
        "isl_db = 10*log10(isl/n^2)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    DesignFlags design_flags;
    CLI::App* design = app.add_subcommand("design", "optimize one configuration");
    add_design_flags(design, design_flags);

    std::string eval_input, eval_acf;
    CLI::App* evaluate = app.add_subcommand("evaluate", "report metrics of a sequence file");
    evaluate->add_option("input", eval_input, "sequence JSON file")->required();
    evaluate->add_option("--acf", eval_acf, "also write the full ACF table (CSV)");

    DesignFlags pareto_flags;
    std::string thetas_flag = "1.0,0.8,0.6,0.4,0.2,0.0";
    CLI::App* pareto = app.add_subcommand("pareto", "trade-off sweep over decreasing theta");
    add_design_flags(pareto, pareto_flags);
    pareto->add_option("--thetas", thetas_flag, "strictly decreasing comma list");

    BenchFlags bench_flags;
    CLI::App* bench = app.add_subcommand("bench", "grid benchmark with fixed seeds");
    bench->add_option("--n", bench_flags.d.n, "sequence length for --m-grid");
    bench->add_option("--alphabet", bench_flags.d.alphabet, "alphabet for --n-grid");
    bench->add_option("--n-grid", bench_flags.n_grid, "comma list of lengths");
    bench->add_option("--m-grid", bench_flags.m_grid, "comma list of alphabet sizes");
    bench->add_option("--metric", bench_flags.metric, "psl or isl");
    bench->add_option("--runs", bench_flags.runs, "random starts per grid cell");
    bench->add_option("--seed", bench_flags.d.seed, "base seed");
    bench->add_option("--eps", bench_flags.d.eps, "minimum per-sweep improvement");
    bench->add_option("--eps1", bench_flags.d.eps1, "bisection accuracy");
    bench->add_option("--lp-init", bench_flags.d.lp_init, "on, off, auto, or power list");
    bench->add_option("--max-sweeps", bench_flags.d.max_sweeps, "sweep cap per start");
    bench->add_option("--threads", bench_flags.d.threads, "worker threads");
    bench->add_option("--out-dir", bench_flags.d.out_dir, "directory for bench.csv");

    try {
        app.parse(argc, argv);
        if (design->parsed()) return cmd_design(design_flags);
        if (evaluate->parsed()) return cmd_evaluate(eval_input, eval_acf);
        if (pareto->parsed()) return cmd_pareto(pareto_flags, thetas_flag);
        if (bench->parsed()) return cmd_bench(bench_flags);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
