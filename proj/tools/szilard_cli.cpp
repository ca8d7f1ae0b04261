// szilard: entropic-uncertainty and erasure-thermodynamics calculator.
//
// Subcommands map onto the library modules: `entropy` (joint position/
// momentum information of a grid state), `erase` (reset/compression
// ledgers), `measure` (measurement back-action ledger), `demon` (sorting
// feasibility), `uncertainty-check` (randomized bound verification).
//
// Exit codes: 0 ok / bound satisfied; 1 internal invariant violated;
// 2 argument error; 3 grid or state-generation failure; 4 numerical
// cross-check mismatch.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "szilard/analytic.hpp"
#include "szilard/demon.hpp"
#include "szilard/entropy.hpp"
#include "szilard/errors.hpp"
#include "szilard/io.hpp"
#include "szilard/thermo.hpp"
#include "szilard/wavegrid.hpp"

namespace {

using szilard::io::format_real;

struct Val {
    std::variant<double, long long, bool, std::string> v;

    std::string text() const {
        if (std::holds_alternative<double>(v)) return format_real(std::get<double>(v));
        if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
        if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
        return std::get<std::string>(v);
    }
};

using KV = std::vector<std::pair<std::string, Val>>;

struct Envelope {
    std::string command;
    KV inputs;
    KV results;                  // single-row results
    std::vector<KV> result_rows; // sweep results (exclusive with `results`)
    std::string units;
};

void write_kv(szilard::io::JsonWriter& w, const KV& kv) {
    w.begin_object();
    for (const auto& [k, val] : kv) {
        w.key(k);
        std::visit([&](const auto& x) { w.value(x); }, val.v);
    }
    w.end_object();
}

std::string to_json(const Envelope& e) {
    szilard::io::JsonWriter w;
    w.begin_object();
    w.field("command", std::string_view(e.command));
    w.key("inputs");
    write_kv(w, e.inputs);
    w.key("results");
    if (e.result_rows.empty()) {
        write_kv(w, e.results);
    } else {
        w.begin_array();
        for (const KV& row : e.result_rows) write_kv(w, row);
        w.end_array();
    }
    w.field("units", std::string_view(e.units));
    w.end_object();
    return w.str();
}

std::string csv_rows(const std::vector<KV>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.front().size(); ++i) {
        if (i) out += ',';
        out += rows.front()[i].first;
    }
    out += '\n';
    for (const KV& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].second.text();
        }
        out += '\n';
    }
    return out;
}

std::string to_csv(const Envelope& e) {
    return csv_rows(e.result_rows.empty() ? std::vector<KV>{e.results} : e.result_rows);
}

std::string to_table(const Envelope& e) {
    auto line = [](const std::string& k, const std::string& v) {
        std::string s = "  " + k;
        if (s.size() < 24) s.append(24 - s.size(), ' ');
        return s + " " + v + "\n";
    };
    std::string out = "command: " + e.command + "  (units: " + e.units + ")\ninputs:\n";
    for (const auto& [k, v] : e.inputs) out += line(k, v.text());
    if (e.result_rows.empty()) {
        out += "results:\n";
        for (const auto& [k, v] : e.results) out += line(k, v.text());
    } else {
        for (std::size_t r = 0; r < e.result_rows.size(); ++r) {
            out += "results[" + std::to_string(r) + "]:\n";
            for (const auto& [k, v] : e.result_rows[r]) out += line(k, v.text());
        }
    }
    return out;
}

void emit(const Envelope& e, const std::string& format) {
    std::string out;
    if (format == "json")
        out = to_json(e);
    else if (format == "csv")
        out = to_csv(e);
    else
        out = to_table(e);
    std::fwrite(out.data(), 1, out.size(), stdout);
}

KV ledger_kv(const szilard::thermo::ThermoLedger& l) {
    return {
        {"work_on_system", {l.work_on_system}},
        {"heat_to_bath", {l.heat_to_bath}},
        {"delta_f", {l.delta_f}},
        {"delta_s_system", {l.delta_s_system}},
        {"delta_s_bath", {l.delta_s_bath}},
        {"delta_s_total", {l.delta_s_total}},
        {"translation_energy", {l.translation_energy}},
        {"temperature", {l.temperature}},
    };
}

KV demon_kv(const szilard::demon::DemonReport& r) {
    return {
        {"p_rms", {r.p_rms}},
        {"sigma_p", {r.sigma_p}},
        {"door_width", {r.door_width}},
        {"sigma_x_after", {r.sigma_x_after}},
        {"ratio", {r.ratio}},
        {"sorting_feasible", {r.sorting_feasible}},
        {"low_energy_photon", {r.low_energy_photon}},
    };
}

struct GridFlags {
    int n = 4096;
    double dx = 0.01;
    std::optional<double> x0;

    szilard::wavegrid::Grid grid() const {
        const double origin = x0 ? *x0 : -(static_cast<double>(n) * dx) / 2.0;
        szilard::wavegrid::Grid g{n, dx, origin};
        g.validate();
        return g;
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& gf) {
    cmd->add_option("--n", gf.n, "grid samples (power of two)")->capture_default_str();
    cmd->add_option("--dx", gf.dx, "grid spacing")->capture_default_str();
    cmd->add_option("--x0", gf.x0, "first sample coordinate (default -n*dx/2)");
}

int run_entropy(const std::string& state, double sigma, double length, double center,
                double shift, double smoothing, std::uint64_t seed, double smoothness,
                const GridFlags& gf, double bound_tol, const std::string& format) {
    using namespace szilard;
    const wavegrid::Grid grid = gf.grid();

    std::optional<wavegrid::PositionState> ps;
    Envelope e;
    e.command = "entropy";
    e.units = "natural-h1";
    e.inputs.push_back({"state", {state}});
    if (state == "gaussian") {
        ps = wavegrid::make_gaussian(grid, sigma, center, shift);
        e.inputs.push_back({"sigma", {sigma}});
        e.inputs.push_back({"center", {center}});
        e.inputs.push_back({"shift", {shift}});
    } else if (state == "uniform") {
        ps = wavegrid::make_uniform(grid, length, center, smoothing);
        e.inputs.push_back({"length", {length}});
        e.inputs.push_back({"center", {center}});
        e.inputs.push_back({"smoothing", {smoothing}});
    } else {
        ps = wavegrid::random_state(seed, grid, smoothness);
        e.inputs.push_back({"seed", {static_cast<long long>(seed)}});
        e.inputs.push_back({"smoothness", {smoothness}});
    }
    e.inputs.push_back({"n", {static_cast<long long>(grid.n)}});
    e.inputs.push_back({"dx", {grid.dx}});
    e.inputs.push_back({"x0", {grid.x0}});
    e.inputs.push_back({"bound_tolerance", {bound_tol}});

    const entropy::EntropyReport r = entropy::joint_information(*ps);
    const double s_thermo = entropy::thermodynamic_entropy(wavegrid::to_momentum(*ps), 1.0);
    const bool satisfied = r.margin >= -bound_tol;

    e.results = {
        {"h_x", {r.h_x}},
        {"h_p", {r.h_p}},
        {"joint_l", {r.joint_l}},
        {"i_o", {r.i_o}},
        {"bound", {r.bound}},
        {"margin", {r.margin}},
        {"bound_satisfied", {satisfied}},
        {"thermodynamic_entropy_k1", {s_thermo}},
    };
    if (state == "uniform") e.results.push_back({"sharp_edged", {smoothing == 0.0}});
    emit(e, format);
    return satisfied ? 0 : 1;
}

int run_erase(const std::string& mode, double temperature, double box_length, double ratio,
              double translation_energy, const std::string& format) {
    using namespace szilard;
    thermo::MemoryScenario sc;
    sc.box_length = box_length;
    sc.temperature = temperature;
    sc.compression_ratio = ratio;
    if (mode == "ontic")
        sc.mode = thermo::MemoryScenario::Mode::ontic_spread;
    else if (mode == "epistemic-left")
        sc.mode = thermo::MemoryScenario::Mode::epistemic_left;
    else
        sc.mode = thermo::MemoryScenario::Mode::epistemic_right;

    const thermo::ThermoLedger l =
        thermo::evaluate_reset(sc, codata::boltzmann_k, translation_energy);

    Envelope e;
    e.command = "erase";
    e.units = "SI";
    e.inputs = {
        {"mode", {mode}},
        {"temperature", {temperature}},
        {"box_length", {box_length}},
        {"ratio", {ratio}},
        {"translation_energy", {translation_energy}},
    };
    e.results = ledger_kv(l);
    emit(e, format);
    return 0;
}

int run_measure(double sigma_before, double sigma_after, double temperature, bool verify,
                const GridFlags& gf, const std::string& format) {
    using namespace szilard;
    const thermo::MeasurementLedger m =
        thermo::measurement_ledger(sigma_before, sigma_after, temperature);

    Envelope e;
    e.command = "measure";
    e.units = "SI";
    e.inputs = {
        {"sigma_before", {sigma_before}},
        {"sigma_after", {sigma_after}},
        {"temperature", {temperature}},
        {"verify_numerically", {verify}},
    };
    e.results = ledger_kv(m.ledger);
    e.results.push_back({"delta_i_ox", {m.delta_i_ox}});
    e.results.push_back({"delta_i_op", {m.delta_i_op}});

    if (verify) {
        const thermo::MeasurementCrossCheck c =
            thermo::verify_measurement_numerically(sigma_before, gf.grid());
        e.inputs.push_back({"n", {static_cast<long long>(gf.grid().n)}});
        e.inputs.push_back({"dx", {gf.grid().dx}});
        e.results.push_back({"check_delta_h_x_numeric", {c.delta_h_x_numeric}});
        e.results.push_back({"check_delta_h_p_numeric", {c.delta_h_p_numeric}});
        e.results.push_back({"check_delta_h_x_closed", {c.delta_h_x_closed}});
        e.results.push_back({"check_delta_h_p_closed", {c.delta_h_p_closed}});
        e.results.push_back({"check_rel_err_x", {c.rel_err_x}});
        e.results.push_back({"check_rel_err_p", {c.rel_err_p}});
        e.results.push_back({"check_tolerance", {c.tolerance}});
    }
    emit(e, format);
    return 0;
}

int run_demon(double mass, double temperature, std::optional<double> photon_energy,
              std::optional<double> photon_fraction, const std::vector<double>& sweep,
              const std::string& format, bool format_given) {
    using namespace szilard;
    demon::DemonParams base;
    base.mass = mass;
    base.temperature = temperature;

    Envelope e;
    e.command = "demon";
    e.units = "SI";
    e.inputs = {
        {"mass", {mass}},
        {"temperature", {temperature}},
    };

    if (!sweep.empty()) {
        base.photon_energy = 1.0;  // per-fraction energies set inside the sweep
        const std::vector<demon::DemonReport> reports = demon::sweep_photon_energy(base, sweep);
        std::string fstr;
        for (std::size_t i = 0; i < sweep.size(); ++i)
            fstr += (i ? "," : "") + format_real(sweep[i]);
        e.inputs.push_back({"sweep_fractions", {fstr}});
        const std::string fmt = format_given ? format : "csv";
        if (fmt == "csv") {
            const std::string out = io::demon_sweep_csv(reports);
            std::fwrite(out.data(), 1, out.size(), stdout);
            return 0;
        }
        for (const demon::DemonReport& r : reports) e.result_rows.push_back(demon_kv(r));
        emit(e, fmt);
        return 0;
    }

    if (photon_fraction)
        base.photon_energy = demon::photon_energy_for_fraction(base, *photon_fraction);
    else
        base.photon_energy = *photon_energy;
    if (photon_fraction) e.inputs.push_back({"photon_fraction", {*photon_fraction}});
    e.inputs.push_back({"photon_energy", {base.photon_energy}});

    e.results = demon_kv(demon::demon_feasibility(base));
    emit(e, format);
    return 0;
}

int run_uncertainty_check(long long trials, std::uint64_t seed, double smoothness,
                          const GridFlags& gf, double bound_tol, const std::string& format) {
    using namespace szilard;
    const wavegrid::Grid grid = gf.grid();

    std::vector<double> margins;
    margins.reserve(trials);
    for (long long t = 0; t < trials; ++t) {
        const wavegrid::PositionState s = wavegrid::random_state(seed + t, grid, smoothness);
        margins.push_back(entropy::joint_information(s).margin);
    }
    std::vector<double> sorted = margins;
    std::sort(sorted.begin(), sorted.end());
    const double min_margin = sorted.front();
    const double median = (trials % 2) ? sorted[trials / 2]
                                       : 0.5 * (sorted[trials / 2 - 1] + sorted[trials / 2]);
    const bool ok = min_margin >= -bound_tol;

    Envelope e;
    e.command = "uncertainty-check";
    e.units = "natural-h1";
    e.inputs = {
        {"trials", {trials}},
        {"seed", {static_cast<long long>(seed)}},
        {"smoothness", {smoothness}},
        {"n", {static_cast<long long>(grid.n)}},
        {"dx", {grid.dx}},
        {"x0", {grid.x0}},
        {"bound_tolerance", {bound_tol}},
    };
    e.results = {
        {"trials", {trials}},
        {"min_margin", {min_margin}},
        {"median_margin", {median}},
        {"bound", {1.0 - std::log(2.0)}},
        {"all_satisfied", {ok}},
    };
    emit(e, format);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint position/momentum information and erasure thermodynamics"};
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* cmd) {
        return cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
    };

    // entropy
    auto* entropy_cmd = app.add_subcommand("entropy", "joint information of a grid state");
    std::string state;
    double sigma = 1.0, length = 1.0, center = 0.0, shift = 0.0, smoothing = 0.0;
    std::uint64_t seed = 1;
    double smoothness = 0.5, bound_tol = szilard::entropy::kBoundTolerance;
    GridFlags egrid;
    entropy_cmd->add_option("--state", state, "state family")
        ->required()
        ->check(CLI::IsMember({"gaussian", "uniform", "random"}));
    entropy_cmd->add_option("--sigma", sigma, "gaussian density std")->capture_default_str();
    entropy_cmd->add_option("--length", length, "uniform support length")->capture_default_str();
    entropy_cmd->add_option("--center", center, "state center")->capture_default_str();
    entropy_cmd->add_option("--shift", shift, "momentum shift")->capture_default_str();
    entropy_cmd->add_option("--smoothing", smoothing, "uniform edge smoothing width")
        ->capture_default_str();
    entropy_cmd->add_option("--seed", seed, "random state seed")->capture_default_str();
    entropy_cmd->add_option("--smoothness", smoothness, "random state packet width")
        ->capture_default_str();
    add_grid_flags(entropy_cmd, egrid);
    entropy_cmd->add_option("--bound-tolerance", bound_tol, "slack on ln(e/2)")
        ->capture_default_str();
    add_format(entropy_cmd);

    // erase
    auto* erase_cmd = app.add_subcommand("erase", "reset/erasure thermodynamic ledger");
    std::string mode;
    double temperature = 300.0, box_length = 1.0, ratio = 2.0, translation_energy = 0.0;
    erase_cmd->add_option("--mode", mode, "reset scenario")
        ->required()
        ->check(CLI::IsMember({"ontic", "epistemic-left", "epistemic-right"}));
    erase_cmd->add_option("--temperature", temperature, "bath temperature (K)")->required();
    erase_cmd->add_option("--box-length", box_length, "box volume (m)")->capture_default_str();
    erase_cmd->add_option("--ratio", ratio, "compression ratio V_i/V_f")->capture_default_str();
    erase_cmd->add_option("--translation-energy", translation_energy,
                          "R-case F*dx displacement loss (J)")
        ->capture_default_str();
    add_format(erase_cmd);

    // measure
    auto* measure_cmd = app.add_subcommand("measure", "position-measurement back-action ledger");
    double sigma_before = 0.0, sigma_after = 0.0, m_temperature = 300.0;
    bool verify = false;
    GridFlags mgrid;
    measure_cmd->add_option("--sigma-before", sigma_before, "pre-measurement std (m)")->required();
    measure_cmd->add_option("--sigma-after", sigma_after, "post-measurement std (m)")->required();
    measure_cmd->add_option("--temperature", m_temperature, "bath temperature (K)")->required();
    measure_cmd->add_flag("--verify-numerically", verify, "cross-check deltas on a grid");
    add_grid_flags(measure_cmd, mgrid);
    add_format(measure_cmd);

    // demon
    auto* demon_cmd = app.add_subcommand("demon", "sorting feasibility from measurement back-action");
    double mass = 0.0, d_temperature = 0.0;
    std::optional<double> photon_energy, photon_fraction;
    std::vector<double> sweep;
    demon_cmd->add_option("--mass", mass, "molecule mass (kg)")->required();
    demon_cmd->add_option("--temperature", d_temperature, "gas temperature (K)")->required();
    auto* pe = demon_cmd->add_option("--photon-energy", photon_energy, "probe photon energy (J)");
    auto* pf = demon_cmd->add_option("--photon-fraction", photon_fraction,
                                     "probe photon energy as a fraction of kT");
    pe->excludes(pf);
    auto* sw = demon_cmd->add_option("--sweep", sweep, "photon fractions to sweep")
                   ->delimiter(',');
    auto* demon_format = add_format(demon_cmd);

    // uncertainty-check
    auto* check_cmd = app.add_subcommand("uncertainty-check", "randomized ln(e/2) bound check");
    long long trials = 0;
    std::uint64_t check_seed = 42;
    double check_smoothness = 0.5, check_tol = szilard::entropy::kBoundTolerance;
    GridFlags cgrid;
    check_cmd->add_option("--trials", trials, "number of random states")->required();
    check_cmd->add_option("--seed", check_seed, "base seed")->capture_default_str();
    check_cmd->add_option("--smoothness", check_smoothness, "random state packet width")
        ->capture_default_str();
    add_grid_flags(check_cmd, cgrid);
    check_cmd->add_option("--bound-tolerance", check_tol, "slack on ln(e/2)")
        ->capture_default_str();
    add_format(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        std::fprintf(stderr, "szilard: %s\n", err.what());
        return 2;
    }

    try {
        if (entropy_cmd->parsed())
            return run_entropy(state, sigma, length, center, shift, smoothing, seed, smoothness,
                               egrid, bound_tol, format);
        if (erase_cmd->parsed())
            return run_erase(mode, temperature, box_length, ratio, translation_energy, format);
        if (measure_cmd->parsed())
            return run_measure(sigma_before, sigma_after, m_temperature, verify, mgrid, format);
        if (demon_cmd->parsed()) {
            if (sweep.empty() && !photon_energy && !photon_fraction) {
                std::fprintf(stderr,
                             "szilard: demon requires --photon-energy, --photon-fraction or "
                             "--sweep\n");
                return 2;
            }
            (void)sw;
            return run_demon(mass, d_temperature, photon_energy, photon_fraction, sweep, format,
                             demon_format->count() > 0);
        }
        if (check_cmd->parsed()) {
            if (trials <= 0) {
                std::fprintf(stderr, "szilard: --trials must be positive\n");
                return 2;
            }
            return run_uncertainty_check(trials, check_seed, check_smoothness, cgrid, check_tol,
                                         format);
        }
    } catch (const szilard::MismatchBeyondTolerance& err) {
        std::fprintf(stderr, "szilard: %s\n", err.what());
        return 4;
    } catch (const szilard::ModelError& err) {
        std::fprintf(stderr, "szilard: %s\n", err.what());
        return 3;
    } catch (const szilard::ArgumentError& err) {
        std::fprintf(stderr, "szilard: %s\n", err.what());
        return 2;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "szilard: internal error: %s\n", err.what());
        return 1;
    }
    return 2;
}
