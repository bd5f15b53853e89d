#include <doctest.h>

#include <cmath>

#include "metrics.hpp"
#include "oracles.hpp"
#include "schemes.hpp"

using namespace fqnm;

TEST_CASE("error_norms: identical fields and uniform offsets") {
    const RealField a{1.0, 2.0, 3.0};
    const ErrorReport zero = error_norms(a, a, 0.5);
    CHECK(zero.l1 == 0.0);
    CHECK(zero.linf == 0.0);
    CHECK(zero.l2_relative.value() == 0.0);

    RealField b = a;
    const double off = 0.05;
    for (auto& v : b) v += off;
    const ErrorReport rep = error_norms(b, a, 0.5);
    CHECK(rep.linf == doctest::Approx(off));
    CHECK(rep.l1 == doctest::Approx(0.5 * 3 * off));
}

TEST_CASE("error_norms: zero reference leaves the relative norm absent") {
    const RealField zero(4, 0.0);
    const RealField num{0.1, 0.0, -0.1, 0.0};
    CHECK_FALSE(error_norms(num, zero, 1.0).l2_relative.has_value());
}

TEST_CASE("locate_shock: ideal step") {
    const Grid1D grid(16, 0.0, 1.0);
    RealField u(16, 1.0);
    for (std::size_t i = 8; i < 16; ++i) u[i] = -1.0;
    const auto d = locate_shock(u, grid);
    REQUIRE(d.has_value());
    // Midpoint crossing lands between the centers of cells 7 and 8.
    CHECK(std::abs(d->shock_position - (grid.x(7) + 0.5 * grid.dx())) <= 0.5 * grid.dx());
    CHECK(d->transition_width == 1.0);
}

TEST_CASE("locate_shock: linear ramp width is 80% of the ramp span") {
    const Grid1D grid(32, 0.0, 1.0);
    RealField u(32, 1.0);
    // Ramp from +1 down to -1 over 8 cells starting at cell 12.
    for (std::size_t i = 0; i < 32; ++i) {
        if (i < 12) u[i] = 1.0;
        else if (i < 20) u[i] = 1.0 - 2.0 * (static_cast<double>(i) - 12.0) / 8.0;
        else u[i] = -1.0;
    }
    const auto d = locate_shock(u, grid);
    REQUIRE(d.has_value());
    CHECK(std::abs(d->transition_width - 6.4) <= 1.0);
}

TEST_CASE("locate_shock: no qualifying transition") {
    const Grid1D grid(16, 0.0, 1.0);
    RealField u(16);
    for (std::size_t i = 0; i < 16; ++i) u[i] = std::sin(0.1 * i);  // increasing
    CHECK_FALSE(locate_shock(u, grid).has_value());
}

TEST_CASE("locate_shock: Hopf-Lax post-shock profile sits at L/2") {
    const SineIC ic{1.0};
    const Grid1D grid(256, 0.0, 1.0);
    const double t = 0.25;  // past breaking
    RealField u(grid.n_cells);
    for (std::size_t i = 0; i < grid.n_cells; ++i) u[i] = hopf_lax(grid.x(i), t, ic);
    const auto d = locate_shock(u, grid);
    REQUIRE(d.has_value());
    CHECK(std::abs(d->shock_position - 0.5) <= grid.dx());
}

TEST_CASE("frequency_sweep_point: low frequency at CFL=1 is quantization-limited") {
    const double delta = 1e-3;
    const double err = frequency_sweep_point(0.1, Scheme::Fqnm, 256, delta, 1.0);
    CHECK(err <= 2.0 * delta);
}

TEST_CASE("frequency_sweep_point: FQNM reruns are bitwise identical") {
    const double a = frequency_sweep_point(0.5, Scheme::Fqnm, 128, 1e-3, 0.9);
    const double b = frequency_sweep_point(0.5, Scheme::Fqnm, 128, 1e-3, 0.9);
    CHECK(a == b);
    CHECK(a > 0.0);
}

TEST_CASE("frequency_sweep_point: rejects out-of-range frequencies") {
    CHECK_THROWS(frequency_sweep_point(0.0, Scheme::Fqnm, 64, 1e-3, 0.9));
    CHECK_THROWS(frequency_sweep_point(1.5, Scheme::Fqnm, 64, 1e-3, 0.9));
}
