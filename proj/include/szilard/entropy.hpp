#ifndef SZILARD_ENTROPY_HPP
#define SZILARD_ENTROPY_HPP

#include <span>

#include "szilard/wavegrid.hpp"

namespace szilard::entropy {

/// Absolute slack on the ln(e/2) bound when deciding bound_satisfied.
inline constexpr double kBoundTolerance = 1e-6;

/// Joint position/momentum information of a pure state, natural units
/// (h = 1), all entropies in nats.
struct EntropyReport {
    double h_x = 0.0;             // position differential entropy
    double h_p = 0.0;             // momentum differential entropy
    double joint_l = 0.0;         // L = h_x + h_p
    double i_o = 0.0;             // dimensionless joint information; = L at h = 1
    double bound = 0.0;           // ln(e/2)
    double margin = 0.0;          // i_o - bound
    bool bound_satisfied = false; // margin >= -kBoundTolerance
};

/// Midpoint Riemann sum of -rho ln rho with the 0 ln 0 := 0 convention.
/// Throws NotNormalized unless sum rho * spacing = 1 within 1e-8.
double differential_entropy(std::span<const double> density, double spacing);

/// h_x from |psi|^2, h_p from |phi|^2 via the unitary transform, and the
/// assembled report. bound_satisfied is true for every valid state.
EntropyReport joint_information(const wavegrid::PositionState& state);

/// S = boltzmann_k * h_p. Differential entropies can be negative; no
/// clamping. Accepts boltzmann_k >= 0.
double thermodynamic_entropy(const wavegrid::MomentumState& momentum_state, double boltzmann_k);

} // namespace szilard::entropy

#endif
