#include "config.hpp"
#include "scenarios.hpp"

#include "fbns/analysis/exponents.hpp"
#include "fbns/error.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verdict = 1;
constexpr int exit_usage = 2;

int run_command(const std::string& path) {
    auto cfg = fbns::cli::load_config(path);
    fbns::cli::apply_environment(cfg);
    const auto out = fbns::cli::run_scenario(cfg);
    for (const auto& v : out.verdicts)
        std::printf("[%s] %s: %.4g %s %.4g\n", v.pass ? "pass" : "FAIL", v.check.c_str(), v.value, v.relation.c_str(),
                    v.limit);
    std::printf("outputs in %s\n", cfg.output_dir.c_str());
    return out.pass() ? exit_ok : exit_verdict;
}

int validate_command(const std::string& path) {
    auto cfg = fbns::cli::load_config(path);
    fbns::cli::apply_environment(cfg);
    const auto rep = fbns::analysis::validate_config(cfg.exponents, cfg.weights);
    for (const auto& item : rep.items)
        std::printf("[%s] %s: %s (%.6g vs %.6g)\n", item.pass ? "pass" : "FAIL", item.group.c_str(),
                    item.condition.c_str(), item.lhs, item.rhs);
    std::printf("config for %s is %s\n", cfg.scenario.c_str(), rep.valid() ? "valid" : "outside the admissible range");
    return rep.valid() ? exit_ok : exit_verdict;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-boundary Stokes scenario runner"};
    app.require_subcommand(1);
    std::string config, dir;
    auto* run = app.add_subcommand("run", "run the scenario described by a config file");
    run->add_option("config", config, "config file")->required();
    auto* report = app.add_subcommand("report", "summarise a completed run directory");
    report->add_option("dir", dir, "run directory")->required();
    auto* validate = app.add_subcommand("validate", "parse a config and check its exponents");
    validate->add_option("config", config, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*run) return run_command(config);
        if (*validate) return validate_command(config);
        std::cout << fbns::cli::emit_report(dir);
        return exit_ok;
    } catch (const fbns::cli::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return exit_usage;
    } catch (const fbns::Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return e.kind() == fbns::ErrorKind::invalid_input ? exit_usage : exit_verdict;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_verdict;
    }
}
