#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "szilard/entropy.hpp"
#include "szilard/errors.hpp"
#include "szilard/wavegrid.hpp"
#include "oracles.hpp"

using namespace szilard;
using wavegrid::Grid;
using wavegrid::cdouble;

namespace {
const Grid kGrid{4096, 0.01, -20.48};

double max_amp_diff(const wavegrid::PositionState& a, const wavegrid::PositionState& b) {
    double m = 0.0;
    for (int i = 0; i < a.grid().n; ++i)
        m = std::max(m, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    return m;
}

double l1_density_diff(const wavegrid::PositionState& a, const wavegrid::PositionState& b) {
    double m = 0.0;
    for (int i = 0; i < a.grid().n; ++i)
        m += std::abs(std::norm(a.amplitudes()[i]) - std::norm(b.amplitudes()[i]));
    return m * a.grid().dx;
}
} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid{12, 0.01, 0.0}.validate(), InvalidGrid);   // not a power of two
    CHECK_THROWS_AS(Grid{8, 0.01, 0.0}.validate(), InvalidGrid);    // too small
    CHECK_THROWS_AS(Grid{64, -0.1, 0.0}.validate(), InvalidGrid);
    CHECK_NOTHROW(Grid{16, 0.5, -4.0}.validate());

    const Grid pg = kGrid.conjugate();
    CHECK(pg.n == kGrid.n);
    CHECK(pg.dx == doctest::Approx(1.0 / (4096 * 0.01)).epsilon(1e-15));
    CHECK(pg.x0 == doctest::Approx(-0.5 / 0.01).epsilon(1e-15));
}

TEST_CASE("gaussian construction: normalization, variance, tails") {
    const auto s = wavegrid::make_gaussian(kGrid, 1.0);

    double mass = 0.0;
    for (const cdouble& a : s.amplitudes()) mass += std::norm(a);
    CHECK(mass * kGrid.dx == doctest::Approx(1.0).epsilon(1e-12));

    // sample std of |psi|^2 equals sigma to 0.1%
    CHECK(oracle::density_std(s.density(), kGrid.dx, kGrid.x0) ==
          doctest::Approx(1.0).epsilon(1e-3));

    CHECK(oracle::density_std(wavegrid::make_gaussian(kGrid, 0.3).density(), kGrid.dx, kGrid.x0) ==
          doctest::Approx(0.3).epsilon(1e-3));

    CHECK_THROWS_AS(wavegrid::make_gaussian(kGrid, -1.0), NonPositiveSigma);
    CHECK_THROWS_AS(wavegrid::make_gaussian(kGrid, 0.0), NonPositiveSigma);
    // sigma = 4 leaves ~1e-7 of mass outside this grid
    CHECK_THROWS_AS(wavegrid::make_gaussian(kGrid, 4.0), GridTooSmall);
    // center near the edge
    CHECK_THROWS_AS(wavegrid::make_gaussian(kGrid, 1.0, 19.0), GridTooSmall);
    CHECK_THROWS_AS(wavegrid::make_gaussian(kGrid, 1.0, 30.0), GridTooSmall);
}

TEST_CASE("gaussian to_momentum reproduces the minimum-uncertainty pair") {
    const auto mom = wavegrid::to_momentum(wavegrid::make_gaussian(kGrid, 1.0));
    const Grid pg = mom.grid();
    CHECK(oracle::density_std(mom.density(), pg.dx, pg.x0) ==
          doctest::Approx(oracle::kInvFourPi).epsilon(1e-3));

    // halving sigma_x doubles sigma_p
    const auto mom2 = wavegrid::to_momentum(wavegrid::make_gaussian(kGrid, 0.5));
    CHECK(oracle::density_std(mom2.density(), pg.dx, pg.x0) ==
          doctest::Approx(oracle::kInvTwoPi).epsilon(1e-3));
}

TEST_CASE("transform matches the direct slow kernel sum") {
    const Grid g{64, 0.5, -16.0};
    const auto s = wavegrid::make_gaussian(g, 1.5, 1.0, 0.2);
    const auto mom = wavegrid::to_momentum(s);
    const auto ref = oracle::slow_transform(s.amplitudes(), g.dx, g.x0);
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) m = std::max(m, std::abs(mom.amplitudes()[j] - ref[j]));
    CHECK(m < 1e-12);
}

TEST_CASE("round trip and Parseval over a state corpus") {
    double max_rt = 0.0, max_pv = 0.0;
    auto probe = [&](const wavegrid::PositionState& s) {
        const auto mom = wavegrid::to_momentum(s);
        max_rt = std::max(max_rt, max_amp_diff(wavegrid::to_position(mom), s));
        double mx = 0.0, mp = 0.0;
        for (const cdouble& a : s.amplitudes()) mx += std::norm(a);
        for (const cdouble& a : mom.amplitudes()) mp += std::norm(a);
        max_pv = std::max(max_pv, std::abs(mx * s.grid().dx - mp * mom.grid().dx));
    };
    probe(wavegrid::make_gaussian(kGrid, 0.3));
    probe(wavegrid::make_gaussian(kGrid, 1.0, 2.5, 0.7));
    probe(wavegrid::make_uniform(kGrid, 2.0));
    probe(wavegrid::make_uniform(kGrid, 2.0, 0.0, 0.1));
    for (int seed = 1; seed <= 50; ++seed) probe(wavegrid::random_state(seed, kGrid));
    CHECK(max_rt < 1e-10);
    CHECK(max_pv < 1e-10);
}

TEST_CASE("translation and boost leave both entropies unchanged") {
    const auto base = entropy::joint_information(wavegrid::make_gaussian(kGrid, 1.0));
    const auto moved = entropy::joint_information(wavegrid::make_gaussian(kGrid, 1.0, 3.0, 0.5));
    CHECK(std::abs(moved.h_x - base.h_x) < 1e-6);
    CHECK(std::abs(moved.h_p - base.h_p) < 1e-6);

    // non-commensurate center too
    const auto odd = entropy::joint_information(wavegrid::make_gaussian(kGrid, 1.0, 1.2345678, -0.31));
    CHECK(std::abs(odd.h_x - base.h_x) < 1e-6);
    CHECK(std::abs(odd.h_p - base.h_p) < 1e-6);
}

TEST_CASE("uniform construction: exact box entropies") {
    const auto u1 = wavegrid::make_uniform(kGrid, 1.0);
    CHECK(entropy::differential_entropy(u1.density(), kGrid.dx) ==
          doctest::Approx(0.0).epsilon(1e-3));

    const auto u2 = wavegrid::make_uniform(kGrid, 2.0);
    CHECK(entropy::differential_entropy(u2.density(), kGrid.dx) ==
          doctest::Approx(oracle::kLn2).epsilon(1e-3));

    CHECK_THROWS_AS(wavegrid::make_uniform(kGrid, 0.0), NonPositiveLength);
    CHECK_THROWS_AS(wavegrid::make_uniform(kGrid, 2.0, 0.0, 0.6), InvalidSmoothing);
    CHECK_THROWS_AS(wavegrid::make_uniform(kGrid, 2.0, 0.0, -0.1), InvalidSmoothing);
    CHECK_THROWS_AS(wavegrid::make_uniform(kGrid, 50.0), GridTooSmall);
    CHECK_THROWS_AS(wavegrid::make_uniform(kGrid, 2.0, 19.5), GridTooSmall);
}

TEST_CASE("smoothed uniform: entropy matches the independent profile quadrature") {
    const double len = 2.0, w = 0.1;
    const auto u = wavegrid::make_uniform(kGrid, len, 0.0, w);
    const double h = entropy::differential_entropy(u.density(), kGrid.dx);

    // reference: midpoint quadrature of the analytic raised-cosine profile
    const double c = 1.0 / (len - w);
    auto profile = [&](double x) {
        const double t = std::abs(x);
        if (t > 1.0) return 0.0;
        if (t > 1.0 - w) return c * 0.5 * (1.0 - std::cos(std::numbers::pi * (1.0 - t) / w));
        return c;
    };
    const double ref = oracle::entropy_of_profile(profile, -1.0, 1.0);
    CHECK(ref == doctest::Approx(oracle::kSmoothedBoxEntropy).epsilon(1e-9));
    CHECK(h == doctest::Approx(ref).epsilon(2e-3));

    // smoothing strictly reduces the flat-top mass; spec window for this case
    CHECK(h > 0.60);
    CHECK(h < 0.694);
}

TEST_CASE("gaussian measurement window halves the spread and doubles sigma_p") {
    const auto before = wavegrid::make_gaussian(kGrid, 1.0);
    // window sigma_w = 1/sqrt(3) takes sigma 1 -> 1/2
    const auto after = wavegrid::measure_position(
        before, wavegrid::GaussianWindow{1.0 / std::sqrt(3.0), 0.0});

    CHECK(after.density_std() == doctest::Approx(0.5).epsilon(1e-6));
    const auto mom = wavegrid::to_momentum(after);
    CHECK(mom.density_std() == doctest::Approx(oracle::kInvTwoPi).epsilon(1e-2));
}

TEST_CASE("near-identity window leaves the state untouched") {
    const auto s = wavegrid::random_state(7, kGrid);
    const auto t = wavegrid::measure_position(s, wavegrid::GaussianWindow{1e9, 0.0});
    CHECK(max_amp_diff(s, t) < 1e-12);
}

TEST_CASE("half-box window on a uniform state drops h_x by ln 2") {
    const auto u = wavegrid::make_uniform(kGrid, 2.0, 1.0);  // support [0, 2]
    const double h0 = entropy::differential_entropy(u.density(), kGrid.dx);

    const auto left = wavegrid::measure_position(
        u, wavegrid::HalfBoxWindow{wavegrid::HalfBoxWindow::Side::left});
    const double h1 = entropy::differential_entropy(left.density(), kGrid.dx);
    CHECK(h0 - h1 == doctest::Approx(oracle::kLn2).epsilon(2e-2));

    // the kept density is uniform on [0, 1) up to edges
    CHECK(left.density_mean() == doctest::Approx(0.5).epsilon(2e-2));
}

TEST_CASE("vanishing overlap is rejected") {
    const auto s = wavegrid::make_gaussian(kGrid, 0.5);
    CHECK_THROWS_AS(
        wavegrid::measure_position(s, wavegrid::GaussianWindow{0.01, 18.0}),
        VanishingOverlap);
}

TEST_CASE("centered gaussian windows never widen the density") {
    for (int seed : {1, 2, 3, 11, 12}) {
        const auto s = wavegrid::random_state(seed, kGrid);
        const double before = s.density_std();
        for (double sw : {0.2, 1.0, 5.0}) {
            const auto t = wavegrid::measure_position(
                s, wavegrid::GaussianWindow{sw, s.density_mean()});
            CHECK(t.density_std() <= before * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("random states are deterministic in the seed and non-degenerate") {
    const auto a = wavegrid::random_state(1, kGrid);
    const auto b = wavegrid::random_state(1, kGrid);
    REQUIRE(a.grid().n == b.grid().n);
    for (int i = 0; i < a.grid().n; ++i) {
        CHECK(a.amplitudes()[i].real() == b.amplitudes()[i].real());
        CHECK(a.amplitudes()[i].imag() == b.amplitudes()[i].imag());
    }

    const auto c = wavegrid::random_state(2, kGrid);
    CHECK(l1_density_diff(a, c) > 1e-3);

    CHECK_THROWS_AS(wavegrid::random_state(1, kGrid, -0.5), NonPositiveInput);
    CHECK_THROWS_AS(wavegrid::random_state(1, kGrid, 0.01), GenerationFailed);
}

TEST_CASE("random states satisfy the joint-information bound") {
    for (int seed = 1; seed <= 100; ++seed) {
        const auto r = entropy::joint_information(wavegrid::random_state(seed, kGrid));
        CHECK(r.margin >= -1e-6);
        CHECK(r.bound_satisfied);
    }
}

TEST_CASE("scale_state: identity, dilation, entropy shifts") {
    const auto g1 = wavegrid::make_gaussian(kGrid, 1.0);
    const auto same = wavegrid::scale_state(g1, 1.0);
    CHECK(max_amp_diff(g1, same) == 0.0);

    const auto half = wavegrid::scale_state(g1, 2.0);
    CHECK(half.density_std() == doctest::Approx(0.5).epsilon(1e-3));

    // Fourier scaling: momentum density of sqrt(2) psi(2x) is the original
    // dilated by 1/2, so its spread doubles and h_p gains ln 2
    const auto mom1 = wavegrid::to_momentum(g1);
    const auto mom2 = wavegrid::to_momentum(half);
    CHECK(mom2.density_std() / mom1.density_std() == doctest::Approx(2.0).epsilon(1e-3));

    for (int seed : {3, 5, 8}) {
        const auto s = wavegrid::random_state(seed, kGrid);
        const auto r0 = entropy::joint_information(s);
        for (double a : {0.5, 2.0}) {
            const auto r1 = entropy::joint_information(wavegrid::scale_state(s, a));
            CHECK(r1.h_x - r0.h_x == doctest::Approx(-std::log(a)).epsilon(1e-3));
            CHECK(r1.h_p - r0.h_p == doctest::Approx(std::log(a)).epsilon(1e-3));
        }
    }

    CHECK_THROWS_AS(wavegrid::scale_state(g1, 0.0), NonPositiveInput);
    // shrinking the grid out from under a wide state
    const auto wide = wavegrid::make_gaussian(kGrid, 2.5);
    CHECK_THROWS_AS(wavegrid::scale_state(wide, 0.1), GridTooSmall);
}

TEST_CASE("acceptance grid admits sigma = 3") {
    // extent 40.96 = 13.65 sigma leaves ~9e-12 outside; must construct fine
    const auto s = wavegrid::make_gaussian(kGrid, 3.0);
    CHECK(oracle::density_std(s.density(), kGrid.dx, kGrid.x0) ==
          doctest::Approx(3.0).epsilon(1e-3));
}
