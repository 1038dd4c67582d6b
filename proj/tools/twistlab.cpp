#include <CLI11.hpp>

#include "twistlab/experiments.hpp"

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

namespace {

// Exit codes: 0 all assertions pass, 1 invalid input, 2 assertion failure.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitAssertion = 2;

struct CommonFlags {
    std::string config;
    std::string out;
    std::string format;
    std::int64_t window_n = 0;
    std::uint64_t seed = 0;
    bool window_set = false;
    bool seed_set = false;
    bool out_set = false;
    bool format_set = false;
};

void attach_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config, "JSON experiment config");
    cmd->add_option("--window", f.window_n, "window half-width N (overrides config)")
        ->check(CLI::PositiveNumber)
        ->each([&f](const std::string&) { f.window_set = true; });
    cmd->add_option("--seed", f.seed, "64-bit PRNG seed (overrides config)")
        ->each([&f](const std::string&) { f.seed_set = true; });
    cmd->add_option("--out", f.out, "output path (format=both appends .json/.csv)")
        ->each([&f](const std::string&) { f.out_set = true; });
    cmd->add_option("--format", f.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "both"}))
        ->each([&f](const std::string&) { f.format_set = true; });
}

int run_kind(const std::string& kind, const CommonFlags& f) {
    using namespace twistlab::runner;
    Overrides ov;
    if (f.window_set) ov.window_n = f.window_n;
    if (f.seed_set) ov.seed = f.seed;
    if (f.out_set) ov.out = f.out;
    if (f.format_set) ov.format = f.format;
    ExperimentConfig cfg = load_config(kind, f.config, ov);
    RunResult res = run_experiment(cfg);
    emit(res, cfg, std::cout);
    return res.all_pass ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact scans over twist cosets: homology presentations, Farey distances, "
                 "group-topology probes"};
    app.require_subcommand(1);

    const struct {
        const char* sub;
        const char* kind;
        const char* help;
    } kinds[] = {
        {"topology", "topology-probe", "openness probe of a subset along generator cosets"},
        {"heegaard", "heegaard-scan", "twist-coset scan of a splitting's homology presentation"},
        {"farey", "farey-scan", "twist-coset distance scan in the Farey graph"},
        {"fixed-class", "fixed-class-scan", "fixed homology classes of f T_c^n across a window"},
        {"snf", "snf", "Smith normal form of an integer matrix, with certificates"},
        {"list", "list", "catalog of built-in groups, disk systems and chain curves"},
    };

    CommonFlags flags[6];
    std::string chosen;
    for (std::size_t i = 0; i < 6; ++i) {
        CLI::App* cmd = app.add_subcommand(kinds[i].sub, kinds[i].help);
        attach_common(cmd, flags[i]);
        const char* kind = kinds[i].kind;
        CommonFlags* f = &flags[i];
        cmd->callback([kind, f, &chosen]() { chosen = kind; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; genuine parse errors are invalid input.
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        for (std::size_t i = 0; i < 6; ++i)
            if (chosen == kinds[i].kind) return run_kind(chosen, flags[i]);
        return kExitInvalid;  // unreachable with require_subcommand(1)
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
