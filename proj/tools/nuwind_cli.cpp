#include "nuwind/config.hpp"
#include "nuwind/csv.hpp"
#include "nuwind/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

std::string default_out_dir() {
    if (const char* env = std::getenv("NUWIND_OUT"); env && *env)
        return env;
    return "out";
}

int execute(nuwind::cli::RunConfig cfg, const std::string& out_dir, bool percent) {
    if (!out_dir.empty())
        cfg.output_dir = out_dir;
    if (percent)
        cfg.pq_percent = true;
    const nuwind::cli::RunReport report = nuwind::cli::run(cfg);
    std::cout << nuwind::cli::report_text(report);
    return report.all_ok() ? 0 : 1;
}

// Keep only the analyses a subcommand is responsible for.
nuwind::cli::RunConfig restrict_to(nuwind::cli::RunConfig cfg,
                                   const std::vector<std::string>& analyses) {
    cfg.analyses = analyses;
    return cfg;
}

nuwind::cli::RunConfig resolve(const std::string& config_path, const std::string& preset,
                               const std::string& fallback_preset) {
    if (!config_path.empty() && !preset.empty())
        throw nuwind::ConfigError("pass either --config or --preset, not both");
    if (!config_path.empty())
        return nuwind::cli::load_config_file(config_path);
    if (preset.empty() && fallback_preset.empty())
        throw nuwind::ConfigError("this subcommand needs --config or --preset");
    return nuwind::cli::preset_config(preset.empty() ? fallback_preset : preset);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wind-farm / nuclear-plant coupling analysis toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset;
    std::string out_dir = default_out_dir();
    bool percent = false;
    app.add_option("--config", config_path, "JSON run configuration")->capture_default_str();
    app.add_option("--preset", preset, "named preset configuration");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_flag("--percent", percent, "report voltage-quality quantities in percent");

    struct Sub {
        const char* name;
        const char* help;
        std::vector<std::string> analyses;
        const char* fallback_preset;
    };
    const std::vector<Sub> subs = {
        {"pq", "voltage-quality assessment at the PCC", {"pq"}, "table-3.5-scenarios"},
        {"reliability", "Markov availability/reliability study", {"reliability"},
         "dabaa-zafarana"},
        {"aggregate", "geographic-smoothing series and ranges", {"aggregate"},
         "dabaa-zafarana"},
        {"credit", "peak-window capacity credit", {"credit"}, ""},
        {"lcoe", "levelized cost of energy and sweeps", {"lcoe"}, "case-ab"},
        {"compare", "coupled vs dispersed portfolio comparison", {"compare"}, "case-ab"},
    };
    for (const auto& sub : subs)
        app.add_subcommand(sub.name, sub.help)->fallthrough();

    auto* run_cmd = app.add_subcommand("run", "run every analysis of a configuration");
    run_cmd->fallthrough();
    std::string run_config_path;
    run_cmd->add_option("config", run_config_path, "JSON run configuration");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            if (!run_config_path.empty())
                return execute(nuwind::cli::load_config_file(run_config_path), out_dir, percent);
            return execute(resolve(config_path, preset, "dabaa-zafarana"), out_dir, percent);
        }
        for (const auto& sub : subs) {
            if (app.get_subcommand(sub.name)->parsed())
                return execute(restrict_to(resolve(config_path, preset, sub.fallback_preset),
                                           sub.analyses),
                               out_dir, percent);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
