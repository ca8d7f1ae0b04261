#include "szilard/analytic.hpp"

#include <cmath>
#include <numbers>

#include "szilard/errors.hpp"

namespace szilard::analytic {

double gaussian_entropy(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw NonPositiveSigma("gaussian_entropy: sigma must be positive");
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma * sigma);
}

double uniform_entropy(double length) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw NonPositiveLength("uniform_entropy: length must be positive");
    return std::log(length);
}

double min_uncertainty_sigma_p(double sigma_x) {
    if (!(sigma_x > 0.0) || !std::isfinite(sigma_x))
        throw NonPositiveSigma("min_uncertainty_sigma_p: sigma_x must be positive");
    return 1.0 / (4.0 * std::numbers::pi * sigma_x);
}

double joint_bound(double h_constant) {
    if (!(h_constant > 0.0) || !std::isfinite(h_constant))
        throw NonPositiveH("joint_bound: h must be positive");
    return std::log(h_constant * std::numbers::e / 2.0);
}

} // namespace szilard::analytic
