// gapsit command line front end.  Loads a JSON parameter file, applies
// dotted-path overrides, and runs one named computation through the C API
// of libgapsit.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical failure,
// 3 physics violation (necessary-condition failure).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gapsit.h"

namespace {

using json = nlohmann::json;

int exit_code_for(gapsit_status status) {
    switch (status) {
        case GAPSIT_OK:
            return 0;
        case GAPSIT_ERR_VALIDATION:
            return 1;
        case GAPSIT_ERR_MAPPING:
        case GAPSIT_ERR_NC_VIOLATION:
            return 3;
        default:
            return 2;
    }
}

void apply_set(json& root, const std::string& assignment) {
    const size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::runtime_error("--set expects key.path=value: " + assignment);
    const std::string path = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    json* node = &root;
    size_t begin = 0;
    std::vector<std::string> keys;
    while (begin <= path.size()) {
        const size_t dot = path.find('.', begin);
        const std::string key =
            path.substr(begin, dot == std::string::npos ? std::string::npos
                                                        : dot - begin);
        if (key.empty())
            throw std::runtime_error("--set: empty key segment in " + path);
        keys.push_back(key);
        if (dot == std::string::npos) break;
        begin = dot + 1;
    }
    for (size_t i = 0; i + 1 < keys.size(); ++i)
        node = &(*node)[keys[i]];
    json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded())
        parsed = value; // plain string
    (*node)[keys.back()] = parsed;
}

int fail(gapsit_status status, const std::string& where) {
    std::cerr << "gapsit: " << where << ": [" << gapsit_status_name(status)
              << "] " << gapsit_last_error_message() << "\n";
    return exit_code_for(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Excitation spectrum of two-level atoms in a frequency gap medium"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global options after the subcommand name

    std::string config_path;
    std::vector<std::string> sets;
    std::string format_flag;
    std::string out_path;
    app.add_option("--config", config_path, "JSON parameter file")
        ->check(CLI::ExistingFile);
    app.add_option("--set", sets, "Override a config field, e.g. --set atoms.beta=0.02");
    app.add_option("--format", format_flag, "Output format: csv or json");
    app.add_option("--out", out_path, "Output file (default: stdout)");

    double H = -0.1;
    int n = 2;
    int l_max = 4;
    int gap_pairs = 1;

    CLI::App* c_medium = app.add_subcommand("medium", "Dielectric scan over the grid");
    CLI::App* c_string = app.add_subcommand("string", "String diagnostic report");
    c_string->add_option("--H", H, "Carrying rapidity")->required();
    c_string->add_option("--n", n, "String size")->required();
    CLI::App* c_ordinary =
        app.add_subcommand("ordinary", "Lower-branch soliton dispersion table");
    c_ordinary->add_option("--n", n, "Soliton size")->required();
    CLI::App* c_gap = app.add_subcommand("gap", "Gap-soliton band and pair tables");
    c_gap->add_option("--lmax", l_max, "Largest pair count")->required();
    c_gap->add_option("--H", H, "Carrying rapidity");
    CLI::App* c_composite =
        app.add_subcommand("composite", "Composite-soliton construction report");
    c_composite->add_option("--H", H, "Carrying rapidity (< 0)")->required();
    c_composite->add_option("--n", n, "String size")->required();
    c_composite->add_option("--gap-pairs", gap_pairs, "Number of gap pairs")
        ->required();
    CLI::App* c_vacuum = app.add_subcommand("vacuum", "Empty-space SIT table");
    c_vacuum->add_option("--n", n, "Soliton size")->required();

    CLI11_PARSE(app, argc, argv);

    json config = json::object();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "gapsit: cannot open config file: " << config_path << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        config = json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
        if (config.is_discarded()) {
            std::cerr << "gapsit: config file is not valid JSON: " << config_path
                      << "\n";
            return 1;
        }
    }
    try {
        for (const std::string& s : sets) apply_set(config, s);
        if (!format_flag.empty()) config["output_format"] = format_flag;
    } catch (const std::exception& e) {
        std::cerr << "gapsit: " << e.what() << "\n";
        return 1;
    }

    gapsit_model* model = nullptr;
    gapsit_status status = gapsit_model_create_json(config.dump().c_str(), &model);
    if (status != GAPSIT_OK) return fail(status, "config");

    gapsit_format format = GAPSIT_FORMAT_CSV;
    if (config.contains("output_format") && config["output_format"] == "json")
        format = GAPSIT_FORMAT_JSON;

    char* text = nullptr;
    if (c_medium->parsed()) {
        status = gapsit_cmd_medium(model, format, &text);
    } else if (c_string->parsed()) {
        status = gapsit_cmd_string(model, H, n, format, &text);
    } else if (c_ordinary->parsed()) {
        status = gapsit_cmd_ordinary(model, n, format, &text);
    } else if (c_gap->parsed()) {
        status = gapsit_cmd_gap(model, l_max, H, format, &text);
    } else if (c_composite->parsed()) {
        status = gapsit_cmd_composite(model, H, n, gap_pairs, format, &text);
    } else if (c_vacuum->parsed()) {
        status = gapsit_cmd_vacuum(model, n, format, &text);
    }

    int rc = 0;
    if (text) {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "gapsit: cannot open output file: " << out_path << "\n";
                rc = 1;
            } else {
                out << text;
            }
        }
        gapsit_string_free(text);
    }
    if (status != GAPSIT_OK && rc == 0)
        rc = fail(status, app.get_subcommands().front()->get_name());

    gapsit_model_destroy(model);
    return rc;
}
