#ifndef SZILARD_DEMON_HPP
#define SZILARD_DEMON_HPP

#include <span>
#include <vector>

#include "szilard/constants.hpp"

namespace szilard::demon {

struct DemonConstants {
    double h = codata::planck_h;     // J s
    double k_b = codata::boltzmann_k; // J/K
};

struct DemonParams {
    double mass = 0.0;          // kg
    double temperature = 0.0;   // K
    double photon_energy = 0.0; // J, h nu of the probe photon
    DemonConstants constants{};

    void validate() const;
};

/// Sorting feasibility for one probe energy. The 4 pi factors are the
/// written order-of-magnitude estimates taken at face value, so the numbers
/// are deterministic but should be read as scale estimates.
struct DemonReport {
    double p_rms = 0.0;         // kg m/s, sqrt(3 m k T)
    double sigma_p = 0.0;       // = p_rms (thermal momentum spread)
    double door_width = 0.0;    // m, h / (4 pi p_rms)
    double sigma_x_after = 0.0; // m, h / (4 pi sqrt(m h nu)) after the probe
    double ratio = 0.0;         // sigma_x_after / door_width = sqrt(3 k T / h nu)
    bool sorting_feasible = false; // ratio <= 1
    bool low_energy_photon = false; // h nu < k T / 10, the accurate-measurement regime
};

/// Throws NonPositiveInput.
DemonReport demon_feasibility(const DemonParams& params);

/// One report per fraction f, probing at photon_energy = f * (k_b * T).
/// ratio follows sqrt(3/f), so it strictly decreases as f increases.
std::vector<DemonReport> sweep_photon_energy(const DemonParams& params_base,
                                             std::span<const double> fractions);

/// The probe energy a sweep entry uses; exposed so callers reproduce the
/// exact floating-point product.
double photon_energy_for_fraction(const DemonParams& params_base, double fraction);

} // namespace szilard::demon

#endif
