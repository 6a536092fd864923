#ifndef GAPSIT_TABLES_HPP
#define GAPSIT_TABLES_HPP

#include <string>
#include <vector>

#include "model.hpp"

namespace gapsit {

/// One output cell: pre-formatted text plus whether it is numeric (JSON
/// emits numeric cells unquoted).  All floating-point formatting runs
/// through fmt_num so csv and json carry byte-identical values.
struct Cell {
    std::string text;
    bool numeric = false;
};

Cell num_cell(double v);
Cell int_cell(long v);
Cell text_cell(std::string s);

/// %.10g formatting; the fixed significant-digit count keeps fixture
/// files byte-stable across runs and platforms.
std::string fmt_num(double v);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct CommandOutput {
    std::string command;
    std::vector<Table> tables;
    bool nc_failed = false; // physics violation to report via exit status
};

std::string render(const CommandOutput& out, OutputFormat format);

CommandOutput cmd_medium(const Model& model);
CommandOutput cmd_string(const Model& model, double H, int n);
CommandOutput cmd_ordinary(const Model& model, int n);
CommandOutput cmd_gap(const Model& model, int l_max, double H);
CommandOutput cmd_composite(const Model& model, double H, int n, int n_gap_pairs);
CommandOutput cmd_vacuum(const Model& model, int n);

} // namespace gapsit

#endif
