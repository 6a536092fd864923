#include "model.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>

namespace gapsit {

using json = nlohmann::json;

namespace {

double get_num(const json& obj, const std::string& scope, const std::string& key,
               double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ValidationError(scope + "." + key + ": must be a number");
    return v.get<double>();
}

void check_keys(const json& obj, const std::string& scope,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok)
            throw ValidationError(scope + "." + it.key() + ": unknown field");
    }
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ValidationError("config: top level must be a JSON object");
    check_keys(root, "config",
               {"medium", "atoms", "solver", "rapidity_mode", "output_format", "grid"});

    RunConfig cfg;

    if (root.contains("medium")) {
        const json& m = root.at("medium");
        if (!m.is_object()) throw ValidationError("medium: must be an object");
        check_keys(m, "medium", {"omega_perp", "omega_par", "c"});
        cfg.medium.omega_perp = get_num(m, "medium", "omega_perp", cfg.medium.omega_perp);
        cfg.medium.omega_par = get_num(m, "medium", "omega_par", cfg.medium.omega_par);
        cfg.medium.c = get_num(m, "medium", "c", cfg.medium.c);
    }
    cfg.medium.validate();

    {
        double omega12 = 1.5, beta = 0.01, gamma = 0.01, rho = 1.0, length = 1000.0;
        std::optional<long> m_atoms;
        if (root.contains("atoms")) {
            const json& a = root.at("atoms");
            if (!a.is_object()) throw ValidationError("atoms: must be an object");
            check_keys(a, "atoms",
                       {"omega12", "beta", "gamma", "rho", "length", "m_atoms"});
            omega12 = get_num(a, "atoms", "omega12", omega12);
            beta = get_num(a, "atoms", "beta", beta);
            gamma = get_num(a, "atoms", "gamma", gamma);
            rho = get_num(a, "atoms", "rho", rho);
            length = get_num(a, "atoms", "length", length);
            if (a.contains("m_atoms")) {
                if (!a.at("m_atoms").is_number_integer())
                    throw ValidationError("atoms.m_atoms: must be an integer");
                m_atoms = a.at("m_atoms").get<long>();
            }
        }
        cfg.atoms = AtomChainParams::make(omega12, beta, gamma, rho, length, m_atoms);
    }

    if (root.contains("solver")) {
        const json& s = root.at("solver");
        if (!s.is_object()) throw ValidationError("solver: must be an object");
        check_keys(s, "solver",
                   {"abs_tol", "rel_tol", "max_iter_1d", "max_iter_2d", "fd_step",
                    "edge_exclusion"});
        cfg.solver.abs_tol = get_num(s, "solver", "abs_tol", cfg.solver.abs_tol);
        cfg.solver.rel_tol = get_num(s, "solver", "rel_tol", cfg.solver.rel_tol);
        cfg.solver.max_iter_1d = static_cast<int>(
            get_num(s, "solver", "max_iter_1d", cfg.solver.max_iter_1d));
        cfg.solver.max_iter_2d = static_cast<int>(
            get_num(s, "solver", "max_iter_2d", cfg.solver.max_iter_2d));
        cfg.solver.fd_step = get_num(s, "solver", "fd_step", cfg.solver.fd_step);
        cfg.solver.edge_exclusion =
            get_num(s, "solver", "edge_exclusion", cfg.solver.edge_exclusion);
    }
    cfg.solver.validate();

    if (root.contains("rapidity_mode")) {
        const json& v = root.at("rapidity_mode");
        if (!v.is_string())
            throw ValidationError("rapidity_mode: must be \"FGM\" or \"VACUUM\"");
        const std::string s = v.get<std::string>();
        if (s == "FGM") cfg.mode = RapidityMode::FGM;
        else if (s == "VACUUM") cfg.mode = RapidityMode::Vacuum;
        else throw ValidationError("rapidity_mode: must be \"FGM\" or \"VACUUM\"");
    }

    if (root.contains("output_format")) {
        const json& v = root.at("output_format");
        if (!v.is_string())
            throw ValidationError("output_format: must be \"csv\" or \"json\"");
        const std::string s = v.get<std::string>();
        if (s == "csv") cfg.format = OutputFormat::Csv;
        else if (s == "json") cfg.format = OutputFormat::Json;
        else throw ValidationError("output_format: must be \"csv\" or \"json\"");
    }

    if (root.contains("grid")) {
        const json& g = root.at("grid");
        if (!g.is_object()) throw ValidationError("grid: must be an object");
        check_keys(g, "grid", {"start", "stop", "points"});
        cfg.grid.start = get_num(g, "grid", "start", cfg.grid.start);
        cfg.grid.stop = get_num(g, "grid", "stop", cfg.grid.stop);
        if (g.contains("points")) {
            if (!g.at("points").is_number_integer())
                throw ValidationError("grid.points: must be an integer");
            cfg.grid.points = g.at("points").get<int>();
        }
    }
    cfg.grid.validate();

    return cfg;
}

std::string config_to_json(const RunConfig& cfg) {
    json root;
    root["medium"] = {{"omega_perp", cfg.medium.omega_perp},
                      {"omega_par", cfg.medium.omega_par},
                      {"c", cfg.medium.c}};
    root["atoms"] = {{"omega12", cfg.atoms.omega12}, {"beta", cfg.atoms.beta},
                     {"gamma", cfg.atoms.gamma},     {"rho", cfg.atoms.rho},
                     {"length", cfg.atoms.length},   {"m_atoms", cfg.atoms.m_atoms}};
    root["solver"] = {{"abs_tol", cfg.solver.abs_tol},
                      {"rel_tol", cfg.solver.rel_tol},
                      {"max_iter_1d", cfg.solver.max_iter_1d},
                      {"max_iter_2d", cfg.solver.max_iter_2d},
                      {"fd_step", cfg.solver.fd_step},
                      {"edge_exclusion", cfg.solver.edge_exclusion}};
    root["rapidity_mode"] = cfg.mode == RapidityMode::FGM ? "FGM" : "VACUUM";
    root["output_format"] = cfg.format == OutputFormat::Csv ? "csv" : "json";
    root["grid"] = {{"start", cfg.grid.start},
                    {"stop", cfg.grid.stop},
                    {"points", cfg.grid.points}};
    return root.dump(2);
}

Model::Model(RunConfig cfg)
    : cfg_(std::move(cfg)),
      medium_(cfg_.medium, cfg_.solver),
      rapidity_(medium_, cfg_.atoms, cfg_.mode) {
    if (cfg_.mode == RapidityMode::FGM) {
        const double w12 = cfg_.atoms.omega12;
        if (!(w12 > cfg_.medium.omega_perp && w12 < cfg_.medium.omega_par))
            throw ValidationError(
                "atoms.omega12: must lie inside the gap in FGM mode");
    }
}

} // namespace gapsit
