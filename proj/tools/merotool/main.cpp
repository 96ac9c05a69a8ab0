#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "mero/error.hpp"

#ifndef MERO_VERSION
#define MERO_VERSION "0.0.0"
#endif

namespace {

struct Flags {
    std::string config;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> order;
    std::optional<unsigned> jobs;
};

int run(const merotool::CommandInfo& info, const Flags& flags) {
    using namespace merotool;
    Overrides ov;
    ov.seed = flags.seed;
    ov.order = flags.order;
    ov.jobs = flags.jobs;
    if (!flags.format.empty()) ov.format = flags.format;
    const Config cfg = load_config(flags.config, info.name, ov, info.default_format);

    Outcome outcome = info.run(cfg);

    Provenance prov;
    prov.version = MERO_VERSION;
    prov.command = std::string(info.name);
    prov.config_hash = cfg.common.config_hash;
    prov.seed = cfg.common.seed;

    std::ostringstream text;
    if (cfg.common.format == "csv") {
        write_csv(text, prov, outcome.table);
    } else {
        outcome.doc["provenance"] = provenance_json(prov);
        write_json(text, outcome.doc);
    }
    if (flags.out.empty()) {
        std::cout << text.str();
        std::cout.flush();
    } else {
        std::ofstream file(flags.out, std::ios::binary);
        if (!file) throw mero::Error(mero::ErrorCode::ConfigError, "cannot write '" + flags.out + "'");
        file << text.str();
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"merotool: constructions and numerical checks for the classes U(lambda, mu)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", MERO_VERSION);

    Flags flags;
    std::vector<std::pair<CLI::App*, const merotool::CommandInfo*>> subs;
    for (const auto& info : merotool::commands()) {
        CLI::App* sub = app.add_subcommand(std::string(info.name), std::string(info.summary));
        sub->add_option("--config", flags.config, "JSON config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", flags.out, "output file (default stdout)");
        sub->add_option("--format", flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", flags.seed, "seed override");
        sub->add_option("--order", flags.order, "series truncation order override");
        sub->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
        for (CLI::Option* opt : sub->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        subs.emplace_back(sub, &info);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : merotool::kExitConfig;
    }

    for (const auto& [sub, info] : subs) {
        if (!sub->parsed()) continue;
        try {
            return run(*info, flags);
        } catch (const mero::Error& e) {
            if (e.code() == mero::ErrorCode::ConfigError) {
                std::cerr << "merotool " << info->name << ": config error: " << e.what() << '\n';
                return merotool::kExitConfig;
            }
            std::cerr << "merotool " << info->name << ": " << e.what() << '\n';
            return merotool::kExitFailure;
        } catch (const std::exception& e) {
            std::cerr << "merotool " << info->name << ": " << e.what() << '\n';
            return merotool::kExitFailure;
        }
    }
    return merotool::kExitConfig;
}
