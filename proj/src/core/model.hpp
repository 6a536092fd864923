#ifndef GAPSIT_MODEL_HPP
#define GAPSIT_MODEL_HPP

#include <memory>
#include <string>

#include "solitons.hpp"

namespace gapsit {

enum class OutputFormat { Csv, Json };

struct GridSpec {
    double start = 0.05;
    double stop = 0.95;
    int points = 50;

    void validate() const {
        if (points < 2)
            throw ValidationError("grid.points: must be >= 2");
        if (!(start < stop))
            throw ValidationError("grid: start must be < stop");
    }
};

struct RunConfig {
    MediumParams medium;
    AtomChainParams atoms;
    SolverConfig solver;
    RapidityMode mode = RapidityMode::FGM;
    OutputFormat format = OutputFormat::Csv;
    GridSpec grid;
};

/// Parses a JSON configuration document.  Unknown keys are rejected and
/// every message names the offending field.
RunConfig parse_config(const std::string& json_text);

/// Serializes a config back to canonical JSON (used by tests/CLI echo).
std::string config_to_json(const RunConfig& cfg);

/// A validated configuration together with the medium and rapidity
/// evaluators built from it.  Immutable after construction.
class Model {
public:
    explicit Model(RunConfig cfg);

    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    const RunConfig& config() const { return cfg_; }
    const Medium& medium() const { return medium_; }
    const Rapidity& rapidity() const { return rapidity_; }

private:
    RunConfig cfg_;
    Medium medium_;
    Rapidity rapidity_;
};

} // namespace gapsit

#endif
