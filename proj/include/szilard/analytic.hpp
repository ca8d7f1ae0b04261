#ifndef SZILARD_ANALYTIC_HPP
#define SZILARD_ANALYTIC_HPP

namespace szilard::analytic {

// Closed-form references kept deliberately independent of the grid-based
// entropy code so the two routes cross-check each other.

/// Differential entropy of a Gaussian density: (1/2) ln(2 pi e sigma^2).
/// Throws NonPositiveSigma.
double gaussian_entropy(double sigma);

/// Differential entropy of a uniform density: ln(length).
/// Throws NonPositiveLength.
double uniform_entropy(double length);

/// Momentum std of the minimum-uncertainty Gaussian pair: 1/(4 pi sigma_x).
/// Throws NonPositiveSigma.
double min_uncertainty_sigma_p(double sigma_x);

/// Joint-information lower bound ln(h e / 2) for Planck constant h.
/// Throws NonPositiveH.
double joint_bound(double h_constant);

} // namespace szilard::analytic

#endif
