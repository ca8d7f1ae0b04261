#ifndef SZILARD_IO_HPP
#define SZILARD_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "szilard/demon.hpp"
#include "szilard/entropy.hpp"
#include "szilard/thermo.hpp"
#include "szilard/wavegrid.hpp"

namespace szilard::io {

/// Digits used for real-valued output fields. 12 significant digits unless
/// the SZILARD_PRECISION environment variable overrides it (6..17).
int output_sig_digits();

/// Scientific notation with output_sig_digits() significant digits;
/// negative zero is canonicalized to zero.
std::string format_real(double v);

/// Minimal ordered JSON emitter: insertion order is emission order, reals
/// go through format_real, so output bytes are reproducible.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);
    JsonWriter& value(double v);
    JsonWriter& value(long long v);
    JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
    JsonWriter& value(unsigned long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);

    /// key(k) followed by value(v).
    template <class T> JsonWriter& field(std::string_view k, T v) {
        key(k);
        return value(v);
    }

    std::string str() const { return out_; }

private:
    void separator();
    void newline();

    std::string out_;
    std::vector<bool> has_items_;
    bool pending_key_ = false;
};

// Flat JSON objects with the canonical field names and order.
void write_entropy_report(JsonWriter& w, const entropy::EntropyReport& r);
void write_thermo_ledger(JsonWriter& w, const thermo::ThermoLedger& l);
void write_demon_report(JsonWriter& w, const demon::DemonReport& r);

/// CSV rows for a photon-energy sweep, one report per line, trailing
/// newline. Header: p_rms,sigma_p,door_width,sigma_x_after,ratio,feasible
std::string demon_sweep_csv(const std::vector<demon::DemonReport>& reports);

/// Text snapshot of a position state: a three-line header (n, dx, x0)
/// followed by one "re im" pair per sample at 17 significant digits, so a
/// save/load round trip is bit-exact.
std::string save_state(const wavegrid::PositionState& state);
wavegrid::PositionState load_state(std::string_view text);

} // namespace szilard::io

#endif
