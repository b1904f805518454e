#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tprop/cli/config.hpp"
#include "tprop/cli/presets.hpp"
#include "tprop/cli/scenario.hpp"
#include "tprop/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tprop::cli::ValidationError("config", "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_report(const tprop::cli::RunReport& rep) {
    std::printf("scenario: %s\n", rep.scenario.c_str());
    std::printf("duration_s: %.3f\n", rep.seconds);
    for (const auto& o : rep.outputs) std::printf("output: %s\n", o.c_str());
    for (const auto& d : rep.diagnostics)
        std::printf("diag %s = %.6g (bound %.6g) %s\n", d.name.c_str(), d.value, d.bound,
                    d.ok ? "ok" : "FAIL");
    std::printf("status: %s\n", rep.all_ok() ? "ok" : "diagnostics exceeded");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form propagators and spectra for torque-driven vector dynamics"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir;
    if (const char* env = std::getenv("TORQUE_PROP_OUT")) out_dir = env;
    if (out_dir.empty()) out_dir = ".";

    auto* run = app.add_subcommand("run", "run a scenario from a config file or preset");
    auto* opt_cfg = run->add_option("--config", config_path, "path to a scenario config");
    auto* opt_pre = run->add_option("--preset", preset_name, "name of a built-in preset");
    run->add_option("--out", out_dir, "output directory (default $TORQUE_PROP_OUT or .)");
    opt_cfg->excludes(opt_pre);

    auto* list = app.add_subcommand("list", "list built-in presets");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "parse and validate a config file");
    validate->add_option("--config", validate_path, "path to a scenario config")->required();

    std::string dump_dir;
    auto* dump = app.add_subcommand("write-presets", "write all preset files to a directory");
    dump->add_option("dir", dump_dir, "target directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& [name, desc] : tprop::cli::list_scenarios())
                std::printf("%-26s %s\n", name.c_str(), desc.c_str());
            return 0;
        }
        if (validate->parsed()) {
            auto cfg = tprop::cli::parse_config(read_file(validate_path));
            std::printf("ok: scenario %s\n", cfg.scenario.c_str());
            return 0;
        }
        if (dump->parsed()) {
            for (const auto& p : tprop::cli::presets()) {
                std::string path = dump_dir + "/" + p.name + ".toml";
                std::ofstream out(path, std::ios::binary);
                if (!out) throw tprop::Error("cannot write " + path);
                out << p.config_text;
                std::printf("wrote %s\n", path.c_str());
            }
            return 0;
        }
        // run
        std::string text;
        if (!preset_name.empty()) {
            const auto* p = tprop::cli::find_preset(preset_name);
            if (!p)
                throw tprop::cli::ValidationError("preset", "unknown preset '" + preset_name + "'");
            text = p->config_text;
        } else if (!config_path.empty()) {
            text = read_file(config_path);
        } else {
            throw tprop::cli::ValidationError("run", "one of --config/--preset is required");
        }
        auto cfg = tprop::cli::parse_config(text);
        auto rep = tprop::cli::run_scenario(cfg, out_dir);
        print_report(rep);
        return rep.all_ok() ? 0 : 1;
    } catch (const tprop::cli::ParseError& e) {
        std::fprintf(stderr, "config parse error: %s\n", e.what());
        return 2;
    } catch (const tprop::cli::ValidationError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const tprop::Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected failure: %s\n", e.what());
        return 3;
    }
}
