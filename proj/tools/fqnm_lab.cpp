// fqnm-lab: experiment runner over the fqnm C API.
//
// Exit codes: 0 success, 1 config error, 2 runtime invariant breach.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fqnm/fqnm.h"

namespace {

int status_to_exit_code(fqnm_status s) {
    switch (s) {
        case FQNM_OK:
            return 0;
        case FQNM_ERR_CONFIG:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fqnm-lab: quantized integer-transfer conservation-law experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;

    CLI::App* run = app.add_subcommand("run", "Run an experiment from a config file");
    run->add_option("--config", config_path, "Path to key = value config file")
        ->required();
    run->add_option("--out", out_dir, "Output directory (overrides out_dir key)");

    CLI::App* list =
        app.add_subcommand("list", "List experiment names and accepted keys");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (list->parsed()) {
        std::fputs(fqnm_experiment_catalog(), stdout);
        return 0;
    }

    const fqnm_status s = fqnm_run_config_file(
        config_path.c_str(), out_dir.empty() ? nullptr : out_dir.c_str());
    if (s != FQNM_OK) {
        std::fprintf(stderr, "fqnm-lab: %s\n", fqnm_last_error());
    }
    return status_to_exit_code(s);
}
