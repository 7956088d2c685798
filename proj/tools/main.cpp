#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypflux/errors.hpp"
#include "hypflux/experiments.hpp"
#include "hypflux/params.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool is_param_key(const std::string& k) {
    static const char* keys[] = {"sigma", "c", "hbar", "kB",
                                 "m",     "K", "F",    "T"};
    for (const char* key : keys)
        if (k == key) return true;
    return false;
}

void apply_param(hypflux::PhysicalParams& p, const std::string& k, double v) {
    if (k == "sigma") p.sigma = v;
    else if (k == "c") p.c = v;
    else if (k == "hbar") p.hbar = v;
    else if (k == "kB") p.kB = v;
    else if (k == "m") p.m = v;
    else if (k == "K") p.K = v;
    else if (k == "F") p.F = v;
    else if (k == "T") p.T = v;
}

struct KeyValue {
    std::string key;
    std::string value;
};

KeyValue split_kv(const std::string& s, const char* what) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
        throw hypflux::DomainError(std::string(what) + " must be key=value: '" +
                                   s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

int run_command(const std::string& experiment,
                const std::vector<std::string>& params,
                const std::vector<std::string>& grids,
                const std::string& params_file, const std::string& out_path,
                const std::string& format) {
    hypflux::ExperimentConfig cfg;
    try {
        cfg = hypflux::default_config(experiment);
    } catch (const hypflux::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!params_file.empty()) {
            std::ifstream in(params_file);
            if (!in)
                throw hypflux::DomainError("cannot open params file '" +
                                           params_file + "'");
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            cfg.params = hypflux::params_from_json(text);
        }
        for (const auto& kv : params) {
            const auto [key, value] = split_kv(kv, "--param");
            double v = 0.0;
            try {
                v = std::stod(value);
            } catch (...) {
                throw hypflux::DomainError("bad numeric value in --param " +
                                           kv);
            }
            if (is_param_key(key))
                apply_param(cfg.params, key, v);
            else if (cfg.options.count(key))
                cfg.options[key] = v;
            else
                throw hypflux::DomainError(
                    "unknown --param key '" + key + "' for experiment '" +
                    experiment + "'");
        }
        for (const auto& kv : grids) {
            const auto [key, value] = split_kv(kv, "--grid");
            if (!cfg.grids.count(key))
                throw hypflux::DomainError("unknown --grid name '" + key +
                                           "' for experiment '" + experiment +
                                           "'");
            cfg.grids[key] = hypflux::parse_grid(value);
        }
        if (format == "csv") cfg.format = hypflux::OutputFormat::csv;
        else if (format == "json") cfg.format = hypflux::OutputFormat::json;
        else throw hypflux::DomainError("format must be csv or json");

        const auto violations = hypflux::validate(cfg.params);
        if (!violations.empty()) {
            std::string msg = "invalid parameters:";
            for (const auto& v : violations) msg += " " + v + ";";
            throw hypflux::DomainError(msg);
        }
    } catch (const hypflux::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    hypflux::RunRecord rec;
    try {
        rec = hypflux::run_experiment(cfg);
    } catch (const hypflux::Error& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return kExitCheckFailed;
    }

    const std::string payload = cfg.format == hypflux::OutputFormat::csv
                                    ? hypflux::to_csv(rec)
                                    : hypflux::to_json(rec);
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
        out << payload;
    }

    for (const auto& c : rec.checks)
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail
                  << "\n";
    return rec.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

int list_command() {
    for (const auto& info : hypflux::list_experiments()) {
        std::printf("%-26s %s\n", info.name.c_str(), info.summary.c_str());
        std::printf("%-26s claim: %s\n", "", info.claim.c_str());
    }
    return kExitOk;
}

int check_command() {
    bool all_pass = true;
    for (const auto& info : hypflux::list_experiments()) {
        hypflux::RunRecord rec;
        try {
            rec = hypflux::run_experiment(hypflux::default_config(info.name));
        } catch (const hypflux::Error& e) {
            std::printf("FAIL %-26s error: %s\n", info.name.c_str(), e.what());
            all_pass = false;
            continue;
        }
        for (const auto& c : rec.checks) {
            std::printf("%s %-26s %-34s %s\n", c.pass ? "PASS" : "FAIL",
                        info.name.c_str(), c.name.c_str(), c.detail.c_str());
            all_pass = all_pass && c.pass;
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypflux: numerical checks for a uniformly accelerated "
                 "oscillator coupled to a 1D scalar field"};
    app.require_subcommand(1);

    std::string experiment, out_path, format = "csv", params_file;
    std::vector<std::string> params, grids;

    auto* run = app.add_subcommand("run", "Run one experiment");
    run->add_option("experiment", experiment, "Experiment name (see `list`)")
        ->required();
    run->add_option("--param", params,
                    "Parameter or option override, key=value (repeatable)");
    run->add_option("--grid", grids,
                    "Grid override, name=start:stop:count[:log] or "
                    "name=v1,v2,... (repeatable)");
    run->add_option("--params-file", params_file,
                    "JSON file with physical parameters");
    run->add_option("--out", out_path, "Output path (default stdout)");
    run->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* list = app.add_subcommand("list", "List available experiments");
    auto* check =
        app.add_subcommand("check", "Run every experiment at its defaults "
                                    "and print a pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (run->parsed())
        return run_command(experiment, params, grids, params_file, out_path,
                           format);
    if (list->parsed()) return list_command();
    if (check->parsed()) return check_command();
    return kExitUsage;
}
