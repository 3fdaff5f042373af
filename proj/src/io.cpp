#include "phasecd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phasecd/metrics.hpp"

namespace phasecd {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string RunManifest::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(command + "\n" + version + "\n" + config)));
    return buf;
}

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sequence_to_json_text(const PhaseSequence& seq) {
    return sequence_to_json_text(seq, std::string());
}

std::string sequence_to_json_text(const PhaseSequence& seq, const std::string& manifest_hash) {
    json j;
    j["n"] = seq.size();
    if (seq.alphabet().is_discrete()) {
        j["alphabet"] = json{{"discrete", seq.alphabet().m}};
        j["indices"] = seq.indices();
    } else {
        j["alphabet"] = "continuous";
    }
    j["phases"] = seq.phase_values();
    if (!manifest_hash.empty()) j["manifest"] = manifest_hash;
    return j.dump(2) + "\n";
}

PhaseSequence sequence_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("sequence file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw IoError("sequence file: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw IoError("sequence file: field 'n' missing or not an integer");
    const int n = j["n"].get<int>();
    if (n < 2) throw IoError("sequence file: field 'n' must be at least 2");
    if (!j.contains("alphabet")) throw IoError("sequence file: field 'alphabet' missing");
    const json& al = j["alphabet"];

    if (al.is_string() && al.get<std::string>() == "continuous") {
        if (!j.contains("phases") || !j["phases"].is_array())
            throw IoError("sequence file: field 'phases' missing or not an array");
        std::vector<double> phases;
        for (const json& v : j["phases"]) {
            if (!v.is_number()) throw IoError("sequence file: field 'phases' must hold numbers");
            phases.push_back(v.get<double>());
        }
        if (static_cast<int>(phases.size()) != n)
            throw IoError("sequence file: field 'phases' length does not equal 'n'");
        return PhaseSequence::continuous(std::move(phases));
    }
    if (al.is_object() && al.contains("discrete")) {
        if (!al["discrete"].is_number_integer())
            throw IoError("sequence file: field 'alphabet.discrete' must be an integer");
        const int m = al["discrete"].get<int>();
        if (m < 2) throw IoError("sequence file: field 'alphabet.discrete' must be at least 2");
        if (!j.contains("indices") || !j["indices"].is_array())
            throw IoError("sequence file: field 'indices' missing or not an array");
        std::vector<int> idx;
        for (const json& v : j["indices"]) {
            if (!v.is_number_integer())
                throw IoError("sequence file: field 'indices' must hold integers");
            idx.push_back(v.get<int>());
        }
        if (static_cast<int>(idx.size()) != n)
            throw IoError("sequence file: field 'indices' length does not equal 'n'");
        for (int v : idx)
            if (v < 0 || v >= m)
                throw IoError("sequence file: field 'indices' entry outside the alphabet");
        return PhaseSequence::discrete(std::move(idx), m);
    }
    throw IoError("sequence file: field 'alphabet' must be \"continuous\" or {\"discrete\": M}");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read file: " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write file: " + path);
}

void save_sequence(const PhaseSequence& seq, const std::string& path) {
    write_text_file(path, sequence_to_json_text(seq));
}

void save_sequence(const PhaseSequence& seq, const std::string& path,
                   const std::string& manifest_hash) {
    write_text_file(path, sequence_to_json_text(seq, manifest_hash));
}

PhaseSequence load_sequence(const std::string& path) {
    return sequence_from_json_text(read_text_file(path));
}

std::string acf_csv_text(const PhaseSequence& seq, const std::string& manifest) {
    const AutocorrVector acf = autocorrelation(seq);
    std::ostringstream out;
    out << "lag,k,re,im,abs,manifest\n";
    out << "0,0," << csv_double(acf.r0) << ",0," << csv_double(acf.r0) << "," << manifest
        << "\n";
    for (size_t k = 0; k < acf.r.size(); ++k) {
        const double re = acf.r[k].real(), im = acf.r[k].imag();
        out << (k + 1) << "," << (k + 1) << "," << csv_double(re) << "," << csv_double(im)
            << "," << csv_double(std::abs(acf.r[k])) << "," << manifest << "\n";
    }
    return out.str();
}

std::string trace_csv_text(const DesignReport& rep, const std::string& manifest) {
    std::ostringstream out;
    out << "start,iteration,objective,psl,isl,manifest\n";
    for (size_t s = 0; s < rep.starts.size(); ++s)
        for (const TracePoint& t : rep.starts[s].trace)
            out << s << "," << t.iteration << "," << csv_double(t.objective) << ","
                << csv_double(t.psl) << "," << csv_double(t.isl) << "," << manifest << "\n";
    return out.str();
}

std::string pareto_csv_text(const std::vector<ParetoRow>& rows, const std::string& manifest) {
    std::ostringstream out;
    out << "theta,psl_db,isl_db,sequence,manifest\n";
    for (const ParetoRow& r : rows)
        out << csv_double(r.theta) << "," << csv_double(r.psl_db) << ","
            << csv_double(r.isl_db) << "," << r.sequence_path << "," << manifest << "\n";
    return out.str();
}

std::string bench_csv_text(const std::vector<BenchRow>& rows, const std::string& manifest) {
    std::ostringstream out;
    out << "n,alphabet,metric,runs,value,value_db,seed,manifest\n";
    for (const BenchRow& r : rows)
        out << r.n << "," << r.alphabet << "," << r.metric << "," << r.runs << ","
            << csv_double(r.value) << "," << csv_double(r.value_db) << "," << r.seed << ","
            << manifest << "\n";
    return out.str();
}

std::string alphabet_label(const Alphabet& al) {
    if (!al.is_discrete()) return "continuous";
    if (al.m == 2) return "binary";
    return "m:" + std::to_string(al.m);
}

std::string rule_label(CoordinateRule rule) {
    return rule == CoordinateRule::Cyclic ? "cyclic" : "mbi-refine";
}

std::string config_echo_json(const DesignConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["alphabet"] = alphabet_label(cfg.alphabet);
    j["theta"] = cfg.theta;
    j["eps"] = cfg.eps;
    j["eps1"] = cfg.eps1;
    j["rule"] = rule_label(cfg.rule);
    j["max_sweeps"] = cfg.max_sweeps;
    j["lp_init"] = cfg.lp_init;
    if (cfg.lp_init) j["lp_powers"] = cfg.lp.powers;
    json starts = json::array();
    for (const StartSpec& s : cfg.starts)
        starts.push_back(json{{"kind", start_kind_name(s.kind)}, {"seed", s.seed}});
    j["starts"] = starts;
    return j.dump();
}

std::string design_report_json(const DesignConfig& cfg, const DesignReport& rep,
                               const RunManifest& manifest) {
    const StartReport& best = rep.starts[rep.best_index];
    auto start_json = [&](const StartReport& r) {
        return json{{"kind", start_kind_name(r.start.kind)},
                    {"seed", r.start.seed},
                    {"objective", r.objective},
                    {"psl", r.psl},
                    {"isl", r.isl},
                    {"psl_db", psl_db(r.psl, cfg.n)},
                    {"isl_db", isl_db(r.isl, cfg.n)},
                    {"sweeps", r.sweeps},
                    {"iterations", r.iterations}};
    };
    json j;
    j["command"] = manifest.command;
    j["version"] = manifest.version;
    j["manifest"] = manifest.hash();
    j["config"] = json::parse(manifest.config);
    j["wall_time_s"] = rep.wall_time_s;
    j["best_index"] = rep.best_index;
    j["best"] = start_json(best);
    json starts = json::array();
    for (const StartReport& r : rep.starts) starts.push_back(start_json(r));
    j["starts"] = starts;
    return j.dump(2) + "\n";
}

}
