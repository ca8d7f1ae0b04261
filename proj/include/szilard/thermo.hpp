#ifndef SZILARD_THERMO_HPP
#define SZILARD_THERMO_HPP

#include "szilard/constants.hpp"
#include "szilard/wavegrid.hpp"

namespace szilard::thermo {

/// Work/heat/entropy account of one isothermal process, SI units.
/// Reversible-limit equalities throughout: physical processes satisfy the
/// corresponding inequalities, so delta_s_total = 0 here means ">= 0".
struct ThermoLedger {
    double work_on_system = 0.0;     // J
    double heat_to_bath = 0.0;       // J
    double delta_f = 0.0;            // J, free-energy change = p dV work
    double delta_s_system = 0.0;     // J/K
    double delta_s_bath = 0.0;       // J/K
    double delta_s_total = 0.0;      // J/K, system + bath
    double translation_energy = 0.0; // J, F dx displacement bookkeeping, kept out of delta_f
    double temperature = 0.0;        // K
};

/// Which reset story is being evaluated: a state whose spread genuinely
/// occupies the box (ontic_spread), or a memory that is definitely on one
/// side and merely unknown (epistemic_left / epistemic_right).
struct MemoryScenario {
    enum class Mode { ontic_spread, epistemic_left, epistemic_right };

    Mode mode = Mode::ontic_spread;
    double box_length = 1.0;        // m
    double temperature = 300.0;     // K
    double compression_ratio = 2.0; // V_initial / V_final, > 1

    void validate() const;
};

/// Reversible isothermal compression of a single-molecule ideal gas
/// (p = kT/V): work in, equal heat out, dE = 0.
/// Throws InvalidVolumes, NonPositiveTemperature.
ThermoLedger isothermal_compression_ledger(double v_initial, double v_final, double temperature,
                                           double boltzmann_k = codata::boltzmann_k);

/// Ledger for a reset operation. Epistemic modes cost zero thermodynamic
/// work and zero system entropy: the piston either never contacts the
/// molecule (left) or translates it between equal volumes (right, dV = 0).
/// translation_energy is the caller's estimate of the R-case F dx
/// displacement loss; it is reported, routed to the bath, and never counted
/// in delta_f.
ThermoLedger evaluate_reset(const MemoryScenario& scenario,
                            double boltzmann_k = codata::boltzmann_k,
                            double translation_energy = 0.0);

/// Minimum-uncertainty account of a position measurement that sharpens a
/// Gaussian from sigma_before to sigma_after. The position information loss
/// is exactly compensated in momentum; heat_to_bath holds the minimum
/// detection energy that must be supplied.
struct MeasurementLedger {
    ThermoLedger ledger;
    double delta_i_ox = 0.0; // ln(sigma_after/sigma_before), negative
    double delta_i_op = 0.0; // -delta_i_ox
};

/// Throws InvalidSigmas, NonPositiveTemperature.
MeasurementLedger measurement_ledger(double sigma_before, double sigma_after, double temperature,
                                     double boltzmann_k = codata::boltzmann_k);

/// Grid cross-check of measurement_ledger: builds a Gaussian of
/// sigma_before, filters it to sigma_before/2 with a Gaussian window, and
/// compares the grid entropy deltas against the closed form.
struct MeasurementCrossCheck {
    double sigma_before = 0.0;
    double sigma_after = 0.0;         // sigma_before / 2
    double delta_h_x_numeric = 0.0;   // grid value
    double delta_h_p_numeric = 0.0;
    double delta_h_x_closed = 0.0;    // -ln 2
    double delta_h_p_closed = 0.0;    // +ln 2
    double rel_err_x = 0.0;
    double rel_err_p = 0.0;
    double tolerance = 0.01;
};

/// Throws MismatchBeyondTolerance when either relative error exceeds 1%;
/// propagates wavegrid/entropy errors.
MeasurementCrossCheck verify_measurement_numerically(double sigma_before,
                                                     const wavegrid::Grid& grid);

} // namespace szilard::thermo

#endif
