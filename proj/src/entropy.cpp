#include "szilard/entropy.hpp"

#include <cmath>

#include "szilard/errors.hpp"

namespace szilard::entropy {

double differential_entropy(std::span<const double> density, double spacing) {
    if (!(spacing > 0.0)) throw NonPositiveInput("spacing must be positive");
    double mass = 0.0;
    for (double rho : density) {
        if (rho < 0.0 || !std::isfinite(rho))
            throw NotNormalized("density has negative or non-finite entries");
        mass += rho;
    }
    mass *= spacing;
    if (std::abs(mass - 1.0) > 1e-8)
        throw NotNormalized("density mass is " + std::to_string(mass) + ", expected 1");

    double h = 0.0;
    for (double rho : density)
        if (rho > 0.0) h += rho * std::log(rho);
    return -h * spacing;
}

EntropyReport joint_information(const wavegrid::PositionState& state) {
    const double h_x = differential_entropy(state.density(), state.grid().dx);
    const wavegrid::MomentumState mom = wavegrid::to_momentum(state);
    const double h_p = differential_entropy(mom.density(), mom.grid().dx);

    EntropyReport r;
    r.h_x = h_x;
    r.h_p = h_p;
    r.joint_l = h_x + h_p;
    r.i_o = r.joint_l;                // I_O = L - ln h, and h = 1 here
    r.bound = 1.0 - std::log(2.0);    // ln(e/2)
    r.margin = r.i_o - r.bound;
    r.bound_satisfied = r.margin >= -kBoundTolerance;
    return r;
}

double thermodynamic_entropy(const wavegrid::MomentumState& momentum_state, double boltzmann_k) {
    if (boltzmann_k < 0.0 || !std::isfinite(boltzmann_k))
        throw NonPositiveInput("boltzmann_k must be nonnegative");
    if (boltzmann_k == 0.0) return 0.0;
    return boltzmann_k * differential_entropy(momentum_state.density(), momentum_state.grid().dx);
}

} // namespace szilard::entropy
