#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qucc/ansatz.hpp"
#include "qucc/encoding.hpp"
#include "qucc/vqe.hpp"

namespace qucc {

struct MethodSpec {
    AnsatzKind kind = AnsatzKind::uccsd;
    bool orbital_optimized = false;

    std::string name() const;
};

/// Parses "uccsd", "puccd", "uccd0", "uccd0_full", each with an optional
/// "oo-" prefix.
MethodSpec parse_method(const std::string& name);

struct RunConfig {
    enum class Source { fcidump, hubbard };

    Source source = Source::fcidump;
    struct Point {
        std::string label;
        double coordinate = 0.0;
        std::string path;  // fcidump source only
    };
    std::vector<Point> points;

    // hubbard source: one point per u value
    int hubbard_sites = 0;
    double hubbard_t = 1.0;
    bool hubbard_periodic = false;
    int hubbard_n_up = 0;
    int hubbard_n_down = 0;

    std::vector<int> frozen_core;
    Mapping mapping = Mapping::parity;
    bool two_qubit_reduction = true;
    bool tapering = false;
    std::vector<MethodSpec> methods;
    bool include_singles = false;
    OptimizerConfig optimizer;
    bool exact_ucc_comparison = false;
    std::string output_dir = "out";
    unsigned seed = 0;  // reserved; default paths are deterministic
};

RunConfig load_run_config(const std::string& path);

/// Static checks only; returns human-readable findings (empty = valid).
std::vector<std::string> validate_config(const RunConfig& config);

/// Executes the scan-by-method matrix, emits scan.csv, summary.json and
/// per-cell trace/weights files into output_dir. Failed cells are reported
/// and skipped; returns 0 only when every cell succeeded.
int run_scan(const RunConfig& config);

}  // namespace qucc
