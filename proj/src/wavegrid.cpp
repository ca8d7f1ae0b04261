#include "szilard/wavegrid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace szilard::wavegrid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Normalization slack permitted on stored states.
constexpr double kNormTol = 1e-10;

// Combined density mass allowed in the outermost 5% of samples at each end.
constexpr double kTailTol = 1e-9;

// Analytic out-of-grid mass allowed when constructing a Gaussian. The
// nominal target is ~1e-12 (extent >= ~14 sigma); 1e-11 admits extents down
// to ~13.6 sigma, which the standard 4096 x 0.01 grid needs for sigma = 3.
constexpr double kGaussianTailTol = 1e-11;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double density_norm(std::span<const cdouble> amps, double spacing) {
    double s = 0.0;
    for (const cdouble& a : amps) s += std::norm(a);
    return s * spacing;
}

// Mass in the outermost floor(0.05 n) samples at each end.
double tail_mass(std::span<const cdouble> amps, double spacing) {
    const int n = static_cast<int>(amps.size());
    const int edge = n / 20;
    double s = 0.0;
    for (int i = 0; i < edge; ++i) s += std::norm(amps[i]) + std::norm(amps[n - 1 - i]);
    return s * spacing;
}

void renormalize(std::vector<cdouble>& amps, double spacing) {
    const double norm2 = density_norm(amps, spacing);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw NotNormalized("state has zero or non-finite norm");
    const double inv = 1.0 / std::sqrt(norm2);
    for (cdouble& a : amps) a *= inv;
}

// In-place unscaled radix-2 DFT; sign = -1 forward (e^{-2 pi i jk/n}).
void fft_radix2(std::vector<cdouble>& a, int sign) {
    const int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cdouble> tw(n / 2);
    for (int j = 0; j < n / 2; ++j) {
        const double ang = sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        tw[j] = cdouble(std::cos(ang), std::sin(ang));
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int stride = n / len;
        for (int i = 0; i < n; i += len) {
            for (int j = 0; j < len / 2; ++j) {
                const cdouble u = a[i + j];
                const cdouble v = a[i + j + len / 2] * tw[static_cast<std::size_t>(j) * stride];
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

double half_gaussian_tail(double z) {
    // Mass of a standard normal beyond z (one side).
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

// 53-bit uniform in [0, 1) from raw engine output; avoids the
// implementation-defined std distributions so seeds reproduce bit-exactly.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    double next() {
        // splitmix64; standardized output sequence.
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

    cdouble complex_normal() {
        const double u1 = 1.0 - next();  // (0, 1]
        const double u2 = next();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
    }

private:
    std::uint64_t state_;
};

// First sample index at or after coordinate c, robust to half-ulp noise in
// x0 + i*dx (commensurate supports must hit exact sample counts).
int index_at_or_after(const Grid& g, double c) {
    const double t = (c - g.x0) / g.dx;
    int i = static_cast<int>(std::ceil(t - 1e-6));
    return std::clamp(i, 0, g.n);
}

} // namespace

Grid Grid::conjugate() const {
    const double dp = 1.0 / (n * dx);
    return Grid{n, dp, -(n / 2) * dp};
}

void Grid::validate() const {
    if (n < 16 || !is_power_of_two(n))
        throw InvalidGrid("grid size must be a power of two >= 16, got " + std::to_string(n));
    if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(static_cast<double>(n) * dx))
        throw InvalidGrid("grid spacing must be positive and finite");
    if (!std::isfinite(x0)) throw InvalidGrid("grid origin must be finite");
}

PositionState PositionState::from_samples(const Grid& grid, std::vector<cdouble> amplitudes,
                                          bool renorm) {
    grid.validate();
    if (static_cast<int>(amplitudes.size()) != grid.n)
        throw InvalidGrid("amplitude count does not match grid size");
    if (renorm) {
        renormalize(amplitudes, grid.dx);
    } else if (std::abs(density_norm(amplitudes, grid.dx) - 1.0) > kNormTol) {
        throw NotNormalized("position state norm deviates from 1 beyond 1e-10");
    }
    if (tail_mass(amplitudes, grid.dx) >= kTailTol)
        throw GridTooSmall("state mass in the outer 5% of the grid exceeds 1e-9");
    return PositionState(grid, std::move(amplitudes));
}

std::vector<double> PositionState::density() const {
    std::vector<double> rho(amplitudes_.size());
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) rho[i] = std::norm(amplitudes_[i]);
    return rho;
}

namespace {
double grid_density_mean(const Grid& g, std::span<const cdouble> amps) {
    double m = 0.0;
    for (int i = 0; i < g.n; ++i) m += g.point(i) * std::norm(amps[i]);
    return m * g.dx;
}

double grid_density_std(const Grid& g, std::span<const cdouble> amps) {
    const double mean = grid_density_mean(g, amps);
    double v = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double d = g.point(i) - mean;
        v += d * d * std::norm(amps[i]);
    }
    return std::sqrt(v * g.dx);
}
} // namespace

double PositionState::density_mean() const { return grid_density_mean(grid_, amplitudes_); }
double PositionState::density_std() const { return grid_density_std(grid_, amplitudes_); }

MomentumState MomentumState::from_samples(const Grid& position_grid,
                                          std::vector<cdouble> amplitudes) {
    position_grid.validate();
    const Grid pg = position_grid.conjugate();
    if (static_cast<int>(amplitudes.size()) != pg.n)
        throw InvalidGrid("amplitude count does not match grid size");
    if (std::abs(density_norm(amplitudes, pg.dx) - 1.0) > kNormTol)
        throw NotNormalized("momentum state norm deviates from 1 beyond 1e-10");
    return MomentumState(pg, position_grid, std::move(amplitudes));
}

std::vector<double> MomentumState::density() const {
    std::vector<double> rho(amplitudes_.size());
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) rho[i] = std::norm(amplitudes_[i]);
    return rho;
}

double MomentumState::density_mean() const { return grid_density_mean(grid_, amplitudes_); }
double MomentumState::density_std() const { return grid_density_std(grid_, amplitudes_); }

PositionState make_gaussian(const Grid& grid, double sigma_x, double center,
                            double momentum_shift) {
    grid.validate();
    if (!(sigma_x > 0.0) || !std::isfinite(sigma_x))
        throw NonPositiveSigma("sigma_x must be positive, got " + std::to_string(sigma_x));
    if (center < grid.x0 || center > grid.end())
        throw GridTooSmall("gaussian center lies outside the grid");
    const double out = half_gaussian_tail((grid.end() - center) / sigma_x) +
                       half_gaussian_tail((center - grid.x0) / sigma_x);
    if (out >= kGaussianTailTol)
        throw GridTooSmall("gaussian mass outside the grid is " + std::to_string(out) +
                           "; enlarge the grid (extent >= ~14 sigma)");

    std::vector<cdouble> amps(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.point(i);
        const double u = (x - center) / sigma_x;
        const double envelope = std::exp(-0.25 * u * u);
        const double phase = kTwoPi * momentum_shift * x;
        amps[i] = envelope * cdouble(std::cos(phase), std::sin(phase));
    }
    return PositionState::from_samples(grid, std::move(amps));
}

PositionState make_uniform(const Grid& grid, double support_length, double center,
                           double edge_smoothing) {
    grid.validate();
    if (!(support_length > 0.0) || !std::isfinite(support_length))
        throw NonPositiveLength("support_length must be positive");
    if (edge_smoothing < 0.0 || !std::isfinite(edge_smoothing))
        throw InvalidSmoothing("edge_smoothing must be nonnegative");
    if (edge_smoothing >= support_length / 4.0)
        throw InvalidSmoothing("edge_smoothing must be < support_length/4");
    const double a = center - support_length / 2.0;
    const double b = center + support_length / 2.0;
    const double margin = 0.05 * grid.extent();
    if (a < grid.x0 + margin || b > grid.end() - margin)
        throw GridTooSmall("support does not fit inside the grid with a 5% margin");

    std::vector<cdouble> amps(grid.n, cdouble(0.0, 0.0));
    if (edge_smoothing == 0.0) {
        // Half-open [a, b): commensurate lengths hit exact sample counts.
        const int lo = index_at_or_after(grid, a);
        const int hi = index_at_or_after(grid, b);
        if (hi <= lo) throw GridTooSmall("support narrower than one grid cell");
        for (int i = lo; i < hi; ++i) amps[i] = 1.0;
    } else {
        const double w = edge_smoothing;
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.point(i);
            double rho = 0.0;
            if (x >= a && x <= b) {
                if (x < a + w)
                    rho = 0.5 * (1.0 - std::cos(std::numbers::pi * (x - a) / w));
                else if (x > b - w)
                    rho = 0.5 * (1.0 - std::cos(std::numbers::pi * (b - x) / w));
                else
                    rho = 1.0;
            }
            amps[i] = std::sqrt(rho);
        }
    }
    return PositionState::from_samples(grid, std::move(amps));
}

MomentumState to_momentum(const PositionState& state) {
    const Grid& g = state.grid();
    const Grid pg = g.conjugate();
    const int n = g.n;
    std::span<const cdouble> psi = state.amplitudes();

    // phi_j = dx e^{-2 pi i p0 x0} e^{-2 pi i j dp x0} DFT_j[(-1)^i psi_i]
    // with p0 dx = -1/2 exactly, so the input phase collapses to (-1)^i.
    std::vector<cdouble> work(psi.begin(), psi.end());
    for (int i = 1; i < n; i += 2) work[i] = -work[i];
    fft_radix2(work, -1);

    const cdouble global = g.dx * std::polar(1.0, -kTwoPi * pg.x0 * g.x0);
    for (int j = 0; j < n; ++j)
        work[j] *= global * std::polar(1.0, -kTwoPi * (static_cast<double>(j) * pg.dx) * g.x0);
    return MomentumState::from_samples(g, std::move(work));
}

PositionState to_position(const MomentumState& state) {
    const Grid& pg = state.grid();
    const Grid& g = state.position_grid();
    const int n = pg.n;
    std::span<const cdouble> phi = state.amplitudes();

    // Undo to_momentum step by step so the round trip cancels exactly.
    const cdouble global = g.dx * std::polar(1.0, -kTwoPi * pg.x0 * g.x0);
    std::vector<cdouble> work(n);
    for (int j = 0; j < n; ++j)
        work[j] = phi[j] *
                  std::polar(1.0, kTwoPi * (static_cast<double>(j) * pg.dx) * g.x0) / global;
    fft_radix2(work, +1);
    const double inv_n = 1.0 / n;
    for (int i = 0; i < n; ++i) {
        work[i] *= inv_n;
        if (i & 1) work[i] = -work[i];
    }
    return PositionState::from_samples(g, std::move(work), /*renormalize=*/false);
}

PositionState measure_position(const PositionState& state, const Window& window) {
    const Grid& g = state.grid();
    std::vector<cdouble> amps(state.amplitudes().begin(), state.amplitudes().end());

    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, GaussianWindow>) {
                if (!(w.sigma_w > 0.0)) throw NonPositiveSigma("window sigma_w must be positive");
                for (int i = 0; i < g.n; ++i) {
                    const double u = (g.point(i) - w.center) / w.sigma_w;
                    amps[i] *= std::exp(-0.25 * u * u);
                }
            } else {
                const double split = state.density_mean();
                for (int i = 0; i < g.n; ++i) {
                    const bool keep = (w.side == HalfBoxWindow::Side::left) ? g.point(i) < split
                                                                            : g.point(i) >= split;
                    if (!keep) amps[i] = 0.0;
                }
            }
        },
        window);

    const double norm = std::sqrt(density_norm(amps, g.dx));
    if (!(norm > 1e-12))
        throw VanishingOverlap("window overlap with the state underflows (norm <= 1e-12)");
    return PositionState::from_samples(g, std::move(amps));
}

PositionState random_state(std::uint64_t seed, const Grid& grid, double smoothness) {
    grid.validate();
    if (!(smoothness > 0.0)) throw NonPositiveInput("smoothness must be positive");
    if (smoothness < 6.0 * grid.dx)
        throw GenerationFailed("smoothness below 6 dx; packets would not resolve on the grid");

    UniformSource rng(seed);
    // Packet placement and width leave 2x dilation headroom on both sides
    // of the transform: spreads this small keep the momentum-space
    // interference fringes of sqrt(a) psi(a x) resolvable down to a = 1/2.
    const double spread = grid.extent() / 24.0;
    const double mid = grid.x0 + 0.5 * grid.extent();

    for (int attempt = 0; attempt < 64; ++attempt) {
        const int packets = 3 + static_cast<int>(rng.next() * 4.0);
        std::vector<cdouble> amps(grid.n, cdouble(0.0, 0.0));
        for (int m = 0; m < packets; ++m) {
            const cdouble weight = rng.complex_normal();
            const double mu = mid + rng.uniform(-spread, spread);
            const double s = smoothness * rng.uniform(0.8, 1.0);
            const double k = rng.uniform(-0.5, 0.5) / smoothness;
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.point(i);
                const double u = (x - mu) / s;
                const double envelope = std::exp(-0.25 * u * u);
                const double phase = kTwoPi * k * x;
                amps[i] += weight * envelope * cdouble(std::cos(phase), std::sin(phase));
            }
        }
        try {
            return PositionState::from_samples(grid, std::move(amps));
        } catch (const Error&) {
            continue;  // retry with fresh draws
        }
    }
    throw GenerationFailed("no valid state after 64 attempts; increase smoothness or the grid");
}

PositionState scale_state(const PositionState& state, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw NonPositiveInput("scale factor must be positive");
    const Grid& g = state.grid();
    std::span<const cdouble> psi = state.amplitudes();
    if (a == 1.0)
        return PositionState::from_samples(g, std::vector<cdouble>(psi.begin(), psi.end()));

    const double sqrt_a = std::sqrt(a);
    auto sample = [&](int j) -> cdouble {
        return (j >= 0 && j < g.n) ? psi[j] : cdouble(0.0, 0.0);
    };
    std::vector<cdouble> amps(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double t = (a * g.point(i) - g.x0) / g.dx;
        const double fj = std::floor(t);
        const int j = static_cast<int>(fj);
        const double u = t - fj;
        // Catmull-Rom through the four nearest samples.
        const cdouble p0 = sample(j - 1), p1 = sample(j), p2 = sample(j + 1), p3 = sample(j + 2);
        const cdouble interp =
            0.5 * (2.0 * p1 + u * (p2 - p0) +
                   u * u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) +
                   u * u * u * (3.0 * (p1 - p2) + p3 - p0));
        amps[i] = sqrt_a * interp;
    }
    return PositionState::from_samples(g, std::move(amps));
}

} // namespace szilard::wavegrid
