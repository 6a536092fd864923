#include "tables.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "numerics.hpp"

namespace gapsit {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
}

Cell num_cell(double v) {
    if (!std::isfinite(v)) return {fmt_num(v), false}; // "nan"/"inf" as text
    return {fmt_num(v), true};
}

Cell int_cell(long v) { return {std::to_string(v), true}; }

Cell text_cell(std::string s) { return {std::move(s), false}; }

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string render_csv(const CommandOutput& out) {
    std::ostringstream os;
    os << "# command: " << out.command << "\n";
    for (const Table& t : out.tables) {
        os << "# table: " << t.name << "\n";
        for (size_t c = 0; c < t.columns.size(); ++c)
            os << (c ? "," : "") << t.columns[c];
        os << "\n";
        for (const auto& row : t.rows) {
            for (size_t c = 0; c < row.size(); ++c)
                os << (c ? "," : "") << row[c].text;
            os << "\n";
        }
    }
    return os.str();
}

std::string render_json(const CommandOutput& out) {
    std::ostringstream os;
    os << "{\"command\":\"" << json_escape(out.command) << "\",\"tables\":[";
    for (size_t ti = 0; ti < out.tables.size(); ++ti) {
        const Table& t = out.tables[ti];
        os << (ti ? "," : "") << "{\"name\":\"" << json_escape(t.name)
           << "\",\"columns\":[";
        for (size_t c = 0; c < t.columns.size(); ++c)
            os << (c ? "," : "") << "\"" << json_escape(t.columns[c]) << "\"";
        os << "],\"rows\":[";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            os << (r ? "," : "") << "[";
            for (size_t c = 0; c < t.rows[r].size(); ++c) {
                const Cell& cell = t.rows[r][c];
                os << (c ? "," : "");
                if (cell.numeric)
                    os << cell.text;
                else
                    os << "\"" << json_escape(cell.text) << "\"";
            }
            os << "]";
        }
        os << "]}";
    }
    os << "]}\n";
    return os.str();
}

Cell err_cell(const Error& e) {
    return text_cell(std::string("err:") + error_code_name(e.code()));
}

} // namespace

std::string render(const CommandOutput& out, OutputFormat format) {
    return format == OutputFormat::Csv ? render_csv(out) : render_json(out);
}

CommandOutput cmd_medium(const Model& model) {
    const Medium& med = model.medium();
    const AtomChainParams& atoms = model.config().atoms;
    CommandOutput out;
    out.command = "medium";
    Table t;
    t.name = "scan";
    t.columns = {"xi", "band", "epsilon", "n_or_nu", "k_or_kappa", "z", "status"};
    for (double xi : linspace(model.config().grid.start, model.config().grid.stop,
                              model.config().grid.points)) {
        std::vector<Cell> row;
        row.push_back(num_cell(xi));
        try {
            const Band b = med.classify(xi);
            const double eps = med.permeability(Complex(xi, 0.0)).real();
            row.push_back(text_cell(band_name(b)));
            row.push_back(num_cell(eps));
            if (b == Band::Gap) {
                row.push_back(num_cell(med.nu(xi)));
                row.push_back(num_cell(med.kappa(xi)));
                row.push_back(text_cell(""));
            } else {
                const Complex n = med.refractive_index(Complex(xi, 0.0), HalfPlane::Upper);
                row.push_back(num_cell(n.real()));
                row.push_back(num_cell(med.wavenumber(Complex(xi, 0.0), HalfPlane::Upper).real()));
                row.push_back(num_cell(med.form_factor(xi, atoms.omega12)));
            }
            row.push_back(text_cell("ok"));
        } catch (const Error& e) {
            while (row.size() < t.columns.size() - 1) row.push_back(text_cell(""));
            row.push_back(err_cell(e));
        }
        t.rows.push_back(std::move(row));
    }
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_string(const Model& model, double H, int n) {
    const Rapidity& rap = model.rapidity();
    CommandOutput out;
    out.command = "string";

    SolitonImage img;
    double xi_center;
    if (rap.mode() == RapidityMode::Vacuum) {
        img = vacuum_string_image(H, n, rap);
        xi_center = rap.invert(H, Band::LowerBranch); // omega12 (1 + H)
    } else {
        if (H == 0.0)
            throw RangeError("cmd_string: H = 0 sits on the band-edge limit");
        xi_center = rap.invert(H, H < 0.0 ? Band::LowerBranch : Band::UpperBranch);
        img = band_string_image(xi_center, n, rap);
    }
    const NcResult nc = check_nc(img);
    const std::vector<Complex> residuals = bae_residuals(img, rap);
    double max_resid = 0.0;
    for (const Complex& r : residuals) max_resid = std::max(max_resid, std::abs(r));

    Table summary;
    summary.name = "summary";
    summary.columns = {"key", "value"};
    summary.rows.push_back({text_cell("H"), num_cell(H)});
    summary.rows.push_back({text_cell("n"), int_cell(n)});
    summary.rows.push_back({text_cell("kind"), text_cell(soliton_kind_name(img.kind))});
    summary.rows.push_back({text_cell("xi_center"), num_cell(xi_center)});
    summary.rows.push_back({text_cell("eigenenergy"), num_cell(img.eigenenergy)});
    summary.rows.push_back({text_cell("nc_ok"), text_cell(nc.ok ? "true" : "false")});
    summary.rows.push_back({text_cell("max_bae_residual"), num_cell(max_resid)});
    out.tables.push_back(std::move(summary));

    Table particles;
    particles.name = "particles";
    particles.columns = {"j",      "re_h",  "im_h",  "re_omega", "im_omega",
                         "re_k",   "im_k",  "nc_ok", "re_bae",   "im_bae"};
    for (int j = 0; j < n; ++j) {
        const size_t u = static_cast<size_t>(j);
        particles.rows.push_back(
            {int_cell(j + 1), num_cell(img.string.rapidities[u].real()),
             num_cell(img.string.rapidities[u].imag()),
             num_cell(img.frequencies[u].real()), num_cell(img.frequencies[u].imag()),
             num_cell(img.momenta[u].real()), num_cell(img.momenta[u].imag()),
             text_cell(nc.entries[u].ok ? "true" : "false"),
             num_cell(residuals[u].real()), num_cell(residuals[u].imag())});
    }
    out.tables.push_back(std::move(particles));
    out.nc_failed = !nc.ok;
    return out;
}

CommandOutput cmd_ordinary(const Model& model, int n) {
    const Rapidity& rap = model.rapidity();
    CommandOutput out;
    out.command = "ordinary";
    Table t;
    t.name = "dispersion";
    t.columns = {"xi", "q", "inv_v", "inv_V", "correction_fraction", "status"};
    for (double xi : linspace(model.config().grid.start, model.config().grid.stop,
                              model.config().grid.points)) {
        std::vector<Cell> row;
        row.push_back(num_cell(xi));
        try {
            const double q = ordinary_dispersion(xi, n, rap);
            const OrdinaryVelocity v = ordinary_inverse_velocity(xi, n, rap);
            row.push_back(num_cell(q));
            row.push_back(num_cell(v.inv_v));
            row.push_back(num_cell(v.inv_V));
            row.push_back(num_cell(v.correction / v.inv_v));
            row.push_back(text_cell("ok"));
        } catch (const Error& e) {
            while (row.size() < t.columns.size() - 1) row.push_back(text_cell(""));
            row.push_back(err_cell(e));
        }
        t.rows.push_back(std::move(row));
    }
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_gap(const Model& model, int l_max, double H) {
    if (l_max < 1)
        throw ValidationError("cmd_gap: l_max must be >= 1");
    const Rapidity& rap = model.rapidity();
    CommandOutput out;
    out.command = "gap";

    Table bands;
    bands.name = "bands";
    bands.columns = {"l",     "center_closed", "center_direct", "width",
                     "mass",  "delta",         "bracket",       "inv_V",
                     "inv_v", "status"};
    Table pairs;
    pairs.name = "pairs";
    pairs.columns = {"l", "j", "xi0", "eta0", "xi", "eta", "residual", "status"};

    int max_admissible = 0;
    for (int l = 1; l <= l_max; ++l) {
        GapBand band;
        try {
            band = gap_band(l, rap);
        } catch (const BandEscapeError&) {
            break;
        }
        max_admissible = l;
        std::vector<Cell> row = {int_cell(l),
                                 num_cell(band.center_closed),
                                 num_cell(band.center_direct),
                                 num_cell(band.width),
                                 num_cell(band.mass),
                                 num_cell(pair_size(band.center_direct, model.medium()))};
        try {
            const GapVelocity v = gap_velocity_ratio(H, band, rap);
            row.push_back(num_cell(v.bracket));
            row.push_back(num_cell(v.inv_V));
            row.push_back(num_cell(v.inv_v));
            row.push_back(text_cell(v.superluminal_warning ? "warn:superluminal" : "ok"));
        } catch (const Error& e) {
            row.push_back(text_cell(""));
            row.push_back(text_cell(""));
            row.push_back(text_cell(""));
            row.push_back(err_cell(e));
        }
        bands.rows.push_back(std::move(row));

        for (int j = 1; j <= l; ++j) {
            const PairParams seed = approx_pair_params(H, l, j, band.ab, rap.atoms());
            std::vector<Cell> prow = {int_cell(l), int_cell(j), num_cell(seed.xi),
                                      num_cell(seed.eta)};
            try {
                const PairParams p = solve_pair_params(H, l, j, rap);
                prow.push_back(num_cell(p.xi));
                prow.push_back(num_cell(p.eta));
                prow.push_back(num_cell(p.residual));
                prow.push_back(text_cell("ok"));
            } catch (const Error& e) {
                prow.push_back(text_cell(""));
                prow.push_back(text_cell(""));
                prow.push_back(text_cell(""));
                prow.push_back(err_cell(e));
            }
            pairs.rows.push_back(std::move(prow));
        }
    }

    Table summary;
    summary.name = "summary";
    summary.columns = {"key", "value"};
    summary.rows.push_back({text_cell("H"), num_cell(H)});
    summary.rows.push_back({text_cell("l_max_requested"), int_cell(l_max)});
    summary.rows.push_back({text_cell("l_max_admissible"), int_cell(max_admissible)});
    out.tables.push_back(std::move(summary));
    out.tables.push_back(std::move(bands));
    out.tables.push_back(std::move(pairs));
    return out;
}

CommandOutput cmd_composite(const Model& model, double H, int n, int n_gap_pairs) {
    const Rapidity& rap = model.rapidity();
    const CompositeSoliton comp = build_composite(H, n, n_gap_pairs, rap);
    CommandOutput out;
    out.command = "composite";

    Table summary;
    summary.name = "summary";
    summary.columns = {"key", "value"};
    summary.rows.push_back({text_cell("H"), num_cell(H)});
    summary.rows.push_back({text_cell("n"), int_cell(n)});
    summary.rows.push_back({text_cell("n_gap_pairs"), int_cell(n_gap_pairs)});
    summary.rows.push_back(
        {text_cell("kind"), text_cell(soliton_kind_name(comp.image.kind))});
    summary.rows.push_back({text_cell("xi_minus"), num_cell(comp.xi_minus)});
    summary.rows.push_back({text_cell("eigenenergy"), num_cell(comp.image.eigenenergy)});
    out.tables.push_back(std::move(summary));

    Table gap;
    gap.name = "gap_part";
    gap.columns = {"j", "xi", "eta", "newton_residual", "q", "kappa", "delta"};
    for (const PairParams& p : comp.gap_part) {
        const double kap = model.medium().kappa(p.xi);
        const double q = p.eta * std::abs(model.medium().kappa_prime(p.xi));
        gap.rows.push_back({int_cell(p.j), num_cell(p.xi), num_cell(p.eta),
                            num_cell(p.residual), num_cell(q), num_cell(kap),
                            num_cell(1.0 / kap)});
    }
    out.tables.push_back(std::move(gap));

    Table particles;
    particles.name = "particles";
    particles.columns = {"j",    "re_h", "im_h", "re_omega", "im_omega",
                         "re_k", "im_k", "h_map_residual"};
    for (int j = 0; j < n; ++j) {
        const size_t u = static_cast<size_t>(j);
        const Complex w = comp.image.frequencies[u];
        const HalfPlane side = w.imag() >= 0.0 ? HalfPlane::Upper : HalfPlane::Lower;
        const double resid =
            std::abs(rap.value(w, side) - comp.image.string.rapidities[u]);
        particles.rows.push_back(
            {int_cell(j + 1), num_cell(comp.image.string.rapidities[u].real()),
             num_cell(comp.image.string.rapidities[u].imag()), num_cell(w.real()),
             num_cell(w.imag()), num_cell(comp.image.momenta[u].real()),
             num_cell(comp.image.momenta[u].imag()), num_cell(resid)});
    }
    out.tables.push_back(std::move(particles));
    return out;
}

CommandOutput cmd_vacuum(const Model& model, int n) {
    if (model.config().mode != RapidityMode::Vacuum)
        throw ValidationError("cmd_vacuum: requires rapidity_mode = VACUUM");
    const AtomChainParams& atoms = model.config().atoms;
    const double c = model.config().medium.c;
    CommandOutput out;
    out.command = "vacuum";
    Table t;
    t.name = "sit";
    t.columns = {"Omega", "Q", "inv_V", "soliton_size", "status"};
    auto emit_row = [&](double Omega) {
        std::vector<Cell> row;
        row.push_back(num_cell(Omega));
        try {
            const double Q = vacuum_dispersion(Omega, Omega / c, n, atoms);
            row.push_back(num_cell(Q));
            row.push_back(num_cell(vacuum_inverse_velocity(Omega, n, atoms, c)));
            row.push_back(num_cell(vacuum_soliton_size(n, atoms)));
            row.push_back(text_cell("ok"));
        } catch (const ResonanceError&) {
            row.push_back(text_cell(""));
            row.push_back(num_cell(vacuum_inverse_velocity(Omega, n, atoms, c)));
            row.push_back(num_cell(vacuum_soliton_size(n, atoms)));
            row.push_back(text_cell("err:Resonance"));
        }
        t.rows.push_back(std::move(row));
    };
    for (double Omega : linspace(model.config().grid.start, model.config().grid.stop,
                                 model.config().grid.points))
        emit_row(Omega);
    emit_row(atoms.omega12); // resonance row: Q jumps, 1/V stays finite
    out.tables.push_back(std::move(t));
    return out;
}

} // namespace gapsit
