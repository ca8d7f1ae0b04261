#ifndef SZILARD_WAVEGRID_HPP
#define SZILARD_WAVEGRID_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "szilard/errors.hpp"

namespace szilard::wavegrid {

using cdouble = std::complex<double>;

/// Uniform sampling lattice. Natural units, h = 1: the same struct serves
/// as a position grid (spacing dx, origin x0) and as its conjugate
/// momentum grid (spacing dp = 1/(n dx), origin -n dp / 2).
struct Grid {
    int n = 0;        // number of samples; power of two, >= 16
    double dx = 0.0;  // spacing, > 0
    double x0 = 0.0;  // coordinate of sample 0

    double point(int i) const { return x0 + i * dx; }
    double extent() const { return n * dx; }
    double end() const { return x0 + n * dx; }

    /// Momentum-side lattice of the unitary e^{-2 pi i p x} transform.
    Grid conjugate() const;

    /// Throws InvalidGrid unless n is a power of two >= 16, dx > 0 and the
    /// extent is finite.
    void validate() const;

    bool operator==(const Grid&) const = default;
};

/// Normalized pure state sampled on a position grid: sum |psi_i|^2 dx = 1.
class PositionState {
public:
    /// Validates grid and tail invariants; normalizes unless told not to
    /// (loading previously normalized data wants bit-exact amplitudes).
    static PositionState from_samples(const Grid& grid, std::vector<cdouble> amplitudes,
                                      bool renormalize = true);

    const Grid& grid() const { return grid_; }
    std::span<const cdouble> amplitudes() const { return amplitudes_; }

    /// |psi_i|^2 for all samples.
    std::vector<double> density() const;

    /// Mean and standard deviation of the position density.
    double density_mean() const;
    double density_std() const;

private:
    PositionState(const Grid& grid, std::vector<cdouble> amplitudes)
        : grid_(grid), amplitudes_(std::move(amplitudes)) {}

    Grid grid_;
    std::vector<cdouble> amplitudes_;
};

/// Conjugate-representation state: sum |phi_j|^2 dp = 1 (Parseval). Keeps
/// the originating position grid so the transform can be inverted exactly.
class MomentumState {
public:
    /// Amplitudes are samples on position_grid.conjugate().
    static MomentumState from_samples(const Grid& position_grid, std::vector<cdouble> amplitudes);

    const Grid& grid() const { return grid_; }
    const Grid& position_grid() const { return position_grid_; }
    std::span<const cdouble> amplitudes() const { return amplitudes_; }

    std::vector<double> density() const;
    double density_mean() const;
    double density_std() const;

private:
    MomentumState(const Grid& grid, const Grid& position_grid, std::vector<cdouble> amplitudes)
        : grid_(grid), position_grid_(position_grid), amplitudes_(std::move(amplitudes)) {}

    Grid grid_;
    Grid position_grid_;
    std::vector<cdouble> amplitudes_;
};

/// Gaussian wave packet: density N(center, sigma_x^2), optional plane-wave
/// factor e^{2 pi i momentum_shift x}.
/// Throws NonPositiveSigma, GridTooSmall.
PositionState make_gaussian(const Grid& grid, double sigma_x, double center = 0.0,
                            double momentum_shift = 0.0);

/// Flat-top density 1/(support_length - edge_smoothing) with raised-cosine
/// edges of width edge_smoothing carved inside the support; sharp indicator
/// for edge_smoothing = 0.
/// Throws NonPositiveLength, InvalidSmoothing, GridTooSmall.
PositionState make_uniform(const Grid& grid, double support_length, double center = 0.0,
                           double edge_smoothing = 0.0);

/// Unitary transform with kernel e^{-2 pi i p x}; Parseval is exact by
/// construction of the discrete transform.
MomentumState to_momentum(const PositionState& state);

/// Exact inverse of to_momentum.
PositionState to_position(const MomentumState& state);

/// Measurement windows. The Gaussian window multiplies amplitudes by
/// exp(-(x-center)^2 / (4 sigma_w^2)), so sigma_w is the std of the
/// window's own density profile. The half-box window keeps one side of the
/// state's density mean.
struct GaussianWindow {
    double sigma_w;
    double center;
};
struct HalfBoxWindow {
    enum class Side { left, right };
    Side side;
};
using Window = std::variant<GaussianWindow, HalfBoxWindow>;

/// Pointwise windowing followed by renormalization (projective position
/// filtering). Throws VanishingOverlap when the post-measurement norm
/// underflows (< 1e-12).
PositionState measure_position(const PositionState& state, const Window& window);

/// Deterministic pseudo-random smooth normalized state: a superposition of
/// 3-6 Gaussian packets with bounded momentum content. Same seed, same
/// bits. Throws NonPositiveInput, GenerationFailed.
PositionState random_state(std::uint64_t seed, const Grid& grid, double smoothness = 0.5);

/// Dilation sqrt(a) psi(a x), resampled on the same grid (cubic
/// interpolation) and renormalized. Throws NonPositiveInput, GridTooSmall.
PositionState scale_state(const PositionState& state, double a);

} // namespace szilard::wavegrid

#endif
