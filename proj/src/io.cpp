#include "szilard/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "szilard/errors.hpp"

namespace szilard::io {

int output_sig_digits() {
    static const int digits = [] {
        if (const char* env = std::getenv("SZILARD_PRECISION")) {
            const int d = std::atoi(env);
            if (d >= 6 && d <= 17) return d;
        }
        return 12;
    }();
    return digits;
}

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0.0
    if (!std::isfinite(v)) throw ArgumentError("cannot serialize a non-finite value");
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*e", output_sig_digits() - 1, v);
    return buf;
}

void JsonWriter::newline() {
    out_ += '\n';
    out_.append(2 * has_items_.size(), ' ');
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!has_items_.empty()) {
        if (has_items_.back()) out_ += ',';
        has_items_.back() = true;
        newline();
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) newline();
    out_ += '}';
    if (has_items_.empty()) out_ += '\n';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) newline();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
    separator();
    out_ += '"';
    out_ += k;
    out_ += "\": ";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += format_real(v);
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(unsigned long long v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    separator();
    out_ += '"';
    for (char c : v) {
        switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        default: out_ += c;
        }
    }
    out_ += '"';
    return *this;
}

void write_entropy_report(JsonWriter& w, const entropy::EntropyReport& r) {
    w.begin_object()
        .field("h_x", r.h_x)
        .field("h_p", r.h_p)
        .field("joint_l", r.joint_l)
        .field("i_o", r.i_o)
        .field("bound", r.bound)
        .field("margin", r.margin)
        .field("bound_satisfied", r.bound_satisfied)
        .end_object();
}

void write_thermo_ledger(JsonWriter& w, const thermo::ThermoLedger& l) {
    w.begin_object()
        .field("work_on_system", l.work_on_system)
        .field("heat_to_bath", l.heat_to_bath)
        .field("delta_f", l.delta_f)
        .field("delta_s_system", l.delta_s_system)
        .field("delta_s_bath", l.delta_s_bath)
        .field("delta_s_total", l.delta_s_total)
        .field("translation_energy", l.translation_energy)
        .field("temperature", l.temperature)
        .end_object();
}

void write_demon_report(JsonWriter& w, const demon::DemonReport& r) {
    w.begin_object()
        .field("p_rms", r.p_rms)
        .field("sigma_p", r.sigma_p)
        .field("door_width", r.door_width)
        .field("sigma_x_after", r.sigma_x_after)
        .field("ratio", r.ratio)
        .field("sorting_feasible", r.sorting_feasible)
        .field("low_energy_photon", r.low_energy_photon)
        .end_object();
}

std::string demon_sweep_csv(const std::vector<demon::DemonReport>& reports) {
    std::string out = "p_rms,sigma_p,door_width,sigma_x_after,ratio,feasible\n";
    for (const demon::DemonReport& r : reports) {
        out += format_real(r.p_rms);
        out += ',';
        out += format_real(r.sigma_p);
        out += ',';
        out += format_real(r.door_width);
        out += ',';
        out += format_real(r.sigma_x_after);
        out += ',';
        out += format_real(r.ratio);
        out += ',';
        out += r.sorting_feasible ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string save_state(const wavegrid::PositionState& state) {
    const wavegrid::Grid& g = state.grid();
    char buf[96];
    std::string out = "szilard-state 1\n";
    std::snprintf(buf, sizeof buf, "n %d\n", g.n);
    out += buf;
    std::snprintf(buf, sizeof buf, "dx %.16e\n", g.dx);
    out += buf;
    std::snprintf(buf, sizeof buf, "x0 %.16e\n", g.x0);
    out += buf;
    for (const wavegrid::cdouble& a : state.amplitudes()) {
        std::snprintf(buf, sizeof buf, "%.16e %.16e\n", a.real(), a.imag());
        out += buf;
    }
    return out;
}

wavegrid::PositionState load_state(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    int version = 0;
    if (!(in >> tag >> version) || tag != "szilard-state" || version != 1)
        throw ArgumentError("not a szilard-state v1 snapshot");
    wavegrid::Grid g;
    std::string k;
    if (!(in >> k >> g.n) || k != "n") throw ArgumentError("bad state header: n");
    if (!(in >> k >> g.dx) || k != "dx") throw ArgumentError("bad state header: dx");
    if (!(in >> k >> g.x0) || k != "x0") throw ArgumentError("bad state header: x0");
    g.validate();
    std::vector<wavegrid::cdouble> amps(g.n);
    for (int i = 0; i < g.n; ++i) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im)) throw ArgumentError("truncated state snapshot");
        amps[i] = {re, im};
    }
    // Saved states were normalized already; do not touch the bits.
    return wavegrid::PositionState::from_samples(g, std::move(amps), /*renormalize=*/false);
}

} // namespace szilard::io
