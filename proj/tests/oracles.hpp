// Test-only reference values and independent numerical oracles. Nothing in
// here may call into the library's entropy or transform code paths: these
// exist to cross-check them.

#ifndef SZILARD_TEST_ORACLES_HPP
#define SZILARD_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

// Frozen reference constants, evaluated with 30-digit arithmetic (mpmath).
inline constexpr double kLnE2 = 0.306852819440054690582767878542;        // ln(e/2)
inline constexpr double kLn2 = 0.693147180559945309417232121458;         // ln 2
inline constexpr double kGaussianEntropySigma1 = 1.41893853320467274178; // (1/2) ln(2 pi e)
inline constexpr double kInvFourPi = 0.0795774715459476678844418816863;  // 1/(4 pi)
inline constexpr double kInvTwoPi = 0.159154943091895335768883763373;    // 1/(2 pi)
// (1/2) ln(2 pi e (1/4pi)^2): thermodynamic entropy of the sigma_x = 1 pair
inline constexpr double kMomentumEntropySigma1 = -1.11208571376461805119756185786;
// k_B * 300 K * ln 2 with k_B = 1.380649e-23 J/K
inline constexpr double kTLn2At300K = 2.87097888507872379450477633378e-21;
// ln(h e / 2) at h = 6.62607015e-34 J s
inline constexpr double kJointBoundSI = -76.0900284514546419040792763075;
// Raised-cosine-edged box, length 2, edge width 0.1: -integral rho ln rho
inline constexpr double kSmoothedBoxEntropy = 0.6621851683365995454033762;
// sqrt(3/f) for the documented sweep fractions
inline constexpr double kSqrt300 = 17.3205080756887729352744634151;
inline constexpr double kSqrt75 = 8.66025403784438646763723170753;
inline constexpr double kSqrt12 = 3.46410161513775458705489268301;
inline constexpr double kSqrt3 = 1.73205080756887729352744634151;
// Argon at 300 K: p_rms = sqrt(3 m k T), m = 6.6335e-26 kg
inline constexpr double kArgonPRms300K = 2.87100707546150084370429790238e-23;
inline constexpr double kArgonDoorWidth300K = 1.83658867764482772374961535552e-12;
inline constexpr double kArgonSigmaXAtF001 = 3.18106490228658031455823553228e-11;

// Midpoint Riemann sum of f over [a, b] with `steps` cells. Deliberately
// naive: this is the auditable reference quadrature.
inline double midpoint_integral(const std::function<double(double)>& f, double a, double b,
                                int steps = 1 << 20) {
    const double h = (b - a) / steps;
    double s = 0.0;
    for (int i = 0; i < steps; ++i) s += f(a + (i + 0.5) * h);
    return s * h;
}

// -integral rho ln rho via the midpoint rule, 0 ln 0 := 0.
inline double entropy_of_profile(const std::function<double(double)>& rho, double a, double b,
                                 int steps = 1 << 20) {
    return midpoint_integral(
        [&](double x) {
            const double r = rho(x);
            return r > 0.0 ? -r * std::log(r) : 0.0;
        },
        a, b, steps);
}

// O(n^2) evaluation of phi(p_j) = dx sum_i psi_i e^{-2 pi i p_j x_i}; the
// slow direct form of the continuous-kernel transform.
inline std::vector<std::complex<double>> slow_transform(std::span<const std::complex<double>> psi,
                                                        double dx, double x0) {
    const int n = static_cast<int>(psi.size());
    const double dp = 1.0 / (n * dx);
    const double p0 = -(n / 2) * dp;
    std::vector<std::complex<double>> phi(n);
    for (int j = 0; j < n; ++j) {
        const double p = p0 + j * dp;
        std::complex<double> s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = x0 + i * dx;
            const double ang = -2.0 * std::numbers::pi * p * x;
            s += psi[i] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        phi[j] = s * dx;
    }
    return phi;
}

// Mean/std of a sampled density (independent of the library helpers).
inline double density_std(std::span<const double> rho, double dx, double x0) {
    double mass = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        mass += rho[i];
        mean += (x0 + i * dx) * rho[i];
    }
    mean /= mass;
    double var = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double d = x0 + i * dx - mean;
        var += d * d * rho[i];
    }
    return std::sqrt(var / mass);
}

} // namespace oracle

#endif
