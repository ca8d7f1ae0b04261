#include "szilard/demon.hpp"

#include <cmath>
#include <numbers>

#include "szilard/errors.hpp"

namespace szilard::demon {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

void DemonParams::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw NonPositiveInput("mass must be positive");
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw NonPositiveInput("temperature must be positive");
    if (!(photon_energy > 0.0) || !std::isfinite(photon_energy))
        throw NonPositiveInput("photon_energy must be positive");
    if (!(constants.h > 0.0) || !(constants.k_b > 0.0))
        throw NonPositiveInput("constants must be positive");
}

DemonReport demon_feasibility(const DemonParams& params) {
    params.validate();
    const double thermal = params.constants.k_b * params.temperature;

    DemonReport r;
    // Same expression shape as sigma_x_after below so that a probe at
    // exactly 3 kT lands on ratio == 1.
    r.p_rms = std::sqrt(params.mass * (3.0 * thermal));
    r.sigma_p = r.p_rms;
    r.door_width = params.constants.h / (kFourPi * r.p_rms);
    r.sigma_x_after = params.constants.h / (kFourPi * std::sqrt(params.mass * params.photon_energy));
    r.ratio = r.sigma_x_after / r.door_width;
    r.sorting_feasible = r.ratio <= 1.0;
    r.low_energy_photon = params.photon_energy < thermal / 10.0;
    return r;
}

double photon_energy_for_fraction(const DemonParams& params_base, double fraction) {
    if (!(fraction > 0.0) || !std::isfinite(fraction))
        throw NonPositiveInput("photon fraction must be positive");
    return fraction * (params_base.constants.k_b * params_base.temperature);
}

std::vector<DemonReport> sweep_photon_energy(const DemonParams& params_base,
                                             std::span<const double> fractions) {
    if (fractions.empty()) throw NonPositiveInput("fractions must be nonempty");
    std::vector<DemonReport> reports;
    reports.reserve(fractions.size());
    for (double f : fractions) {
        DemonParams p = params_base;
        p.photon_energy = photon_energy_for_fraction(params_base, f);
        reports.push_back(demon_feasibility(p));
    }
    return reports;
}

} // namespace szilard::demon
