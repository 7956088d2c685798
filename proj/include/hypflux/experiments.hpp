#pragma once

// Named experiments, one per verified claim.  Each experiment produces a
// table of plot-ready rows plus a list of pass/fail checks; the checks of
// the full catalog, run at their default configurations, are the
// project's acceptance gate.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypflux/params.hpp"

namespace hypflux {

/// Uniform grid start..stop with `count` points, log-spaced when log is
/// set (start, stop > 0); or an explicit list of values.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    bool log = false;
    std::vector<double> values; ///< when non-empty, used verbatim

    std::vector<double> expand() const;
    std::string to_string() const;
};

GridSpec parse_grid(const std::string& text);

enum class OutputFormat { csv, json };

struct ExperimentConfig {
    std::string name;
    PhysicalParams params;
    std::map<std::string, double> options; ///< experiment-specific scalars
    std::map<std::string, GridSpec> grids;
    OutputFormat format = OutputFormat::csv;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunRecord {
    ExperimentConfig config;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<CheckResult> checks;
    std::string timestamp; ///< ISO-8601 UTC; excluded from CSV output
    std::string version;

    bool all_checks_pass() const;
};

struct ExperimentInfo {
    std::string name;
    std::string summary; ///< one line: what is computed
    std::string claim;   ///< the verified statement
};

/// Catalog in canonical (acceptance) order.
std::vector<ExperimentInfo> list_experiments();

/// Default (acceptance-grade) configuration for a named experiment.
/// Throws DomainError for unknown names.
ExperimentConfig default_config(const std::string& name);

/// Run an experiment.  The config's params/options/grids override the
/// defaults; unknown option or grid names are rejected.
RunRecord run_experiment(const ExperimentConfig& cfg);

/// CSV rendering of a run: header plus data rows, deterministic bytes.
std::string to_csv(const RunRecord& rec);

/// JSON rendering: {config, columns, rows, checks, timestamp, version}.
std::string to_json(const RunRecord& rec);

extern const char* const kToolVersion;

} // namespace hypflux
