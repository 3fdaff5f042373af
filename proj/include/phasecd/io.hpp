#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasecd/driver.hpp"
#include "phasecd/sequence.hpp"

namespace phasecd {

// malformed or unreadable artifact files; the message names the failing field
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// stamped into every output file so artifacts can be traced to the invocation
// that produced them; the hash covers command, version and the canonical
// config echo, never timestamps, so repeated runs stamp identical bytes
struct RunManifest {
    std::string command;
    std::string version;
    std::string config;  // canonical sorted-key JSON text
    std::string hash() const;
};

std::uint64_t fnv1a64(const std::string& text);

std::string sequence_to_json_text(const PhaseSequence& seq);
// variant stamped with the producing run's manifest hash; readers ignore it
std::string sequence_to_json_text(const PhaseSequence& seq, const std::string& manifest_hash);
PhaseSequence sequence_from_json_text(const std::string& text);

void save_sequence(const PhaseSequence& seq, const std::string& path);
void save_sequence(const PhaseSequence& seq, const std::string& path,
                   const std::string& manifest_hash);
PhaseSequence load_sequence(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// columns lag,k,re,im,abs,manifest; the lag-0 row carries r0 = n
std::string acf_csv_text(const PhaseSequence& seq, const std::string& manifest);

// columns start,iteration,objective,psl,isl,manifest
std::string trace_csv_text(const DesignReport& rep, const std::string& manifest);

struct ParetoRow {
    double theta = 0.0;
    double psl_db = 0.0;
    double isl_db = 0.0;
    std::string sequence_path;
};

// columns theta,psl_db,isl_db,sequence,manifest
std::string pareto_csv_text(const std::vector<ParetoRow>& rows, const std::string& manifest);

struct BenchRow {
    int n = 0;
    std::string alphabet;
    std::string metric;
    int runs = 0;
    double value = 0.0;
    double value_db = 0.0;
    std::uint64_t seed = 0;
};

// columns n,alphabet,metric,runs,value,value_db,seed,manifest
std::string bench_csv_text(const std::vector<BenchRow>& rows, const std::string& manifest);

std::string alphabet_label(const Alphabet& al);
std::string rule_label(CoordinateRule rule);

// canonical config echo; identical configs serialize to identical text
std::string config_echo_json(const DesignConfig& cfg);

std::string design_report_json(const DesignConfig& cfg, const DesignReport& rep,
                               const RunManifest& manifest);

// fixed-precision float formatting used by every CSV writer
std::string csv_double(double v);

}
