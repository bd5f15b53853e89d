#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "euler.hpp"

using namespace fqnm;

namespace {

EulerTriple conserved(double rho, double u, double p, double gamma) {
    return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

EulerTriple flux_of(const EulerTriple& U, double gamma) {
    const auto [fp, fm] = lf_split_flux(U, gamma, 0.0);
    return {fp[0] + fm[0], fp[1] + fm[1], fp[2] + fm[2]};
}

std::array<QuantScale, 3> scales3(double d) {
    return {QuantScale{d}, QuantScale{d}, QuantScale{d}};
}

}  // namespace

TEST_CASE("pressure: ideal-gas closure") {
    CHECK(pressure(1.0, 0.0, 2.5, 1.4) == doctest::Approx(1.0));
    CHECK(pressure(1.0, 1.0, 1.0, 1.4) == doctest::Approx(0.2));
    // Degenerate internal energy.
    CHECK(pressure(2.0, 2.0, 1.0, 1.4) == doctest::Approx(0.0));
    CHECK_THROWS_AS(pressure(-1.0, 0.0, 1.0, 1.4), PositivityError);
}

TEST_CASE("lf_split_flux: split consistency and rest-state symmetry") {
    const double gamma = 1.4;
    // Zero-velocity uniform gas: momentum flux is the pressure.
    const EulerTriple rest = conserved(1.0, 0.0, 1.0, gamma);
    const EulerTriple f = flux_of(rest, gamma);
    CHECK(f[0] == doctest::Approx(0.0));
    CHECK(f[1] == doctest::Approx(1.0));
    CHECK(f[2] == doctest::Approx(0.0));

    // f_plus + f_minus reproduces f on sampled states.
    for (double rho : {0.5, 1.0, 3.0}) {
        for (double u : {-2.0, 0.0, 1.5}) {
            for (double p : {0.3, 1.0, 9.0}) {
                const EulerTriple U = conserved(rho, u, p, gamma);
                const EulerTriple fu = flux_of(U, gamma);
                const auto [fp, fm] = lf_split_flux(U, gamma, 5.0);
                for (int c = 0; c < 3; ++c) {
                    CHECK(std::abs(fp[c] + fm[c] - fu[c]) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("lf_split_flux: split parts are monotone along state rays") {
    // With alpha dominating the spectral radius, d(f_pm)/ds = J +- alpha*I
    // projected on the ray keeps a fixed sign; scan numerically.
    const double gamma = 1.4;
    const double alpha = 10.0;
    const EulerTriple base = conserved(1.0, 0.5, 1.0, gamma);
    const EulerTriple dir = {0.1, 0.05, 0.2};
    double prev_p[3], prev_m[3];
    bool first = true;
    for (int k = 0; k <= 100; ++k) {
        EulerTriple U;
        for (int c = 0; c < 3; ++c) U[c] = base[c] + 0.01 * k * dir[c];
        const auto [fp, fm] = lf_split_flux(U, gamma, alpha);
        if (!first) {
            for (int c = 0; c < 3; ++c) {
                CHECK(fp[c] >= prev_p[c] - 1e-12);
                CHECK(fm[c] <= prev_m[c] + 1e-12);
            }
        }
        for (int c = 0; c < 3; ++c) {
            prev_p[c] = fp[c];
            prev_m[c] = fm[c];
        }
        first = false;
    }
}

TEST_CASE("shu_osher_init: left state satisfies the Mach-3 jump conditions") {
    const double gamma = 1.4;
    // Shock speed for a Mach-3 shock into (1, 0, 1).
    const double s = 3.0 * std::sqrt(gamma);
    const EulerTriple right = conserved(1.0, 0.0, 1.0, gamma);
    const EulerTriple left = conserved(3.857143, 2.629369, 10.33333, gamma);
    const EulerTriple f_r = flux_of(right, gamma);
    const EulerTriple f_l = flux_of(left, gamma);
    for (int c = 0; c < 3; ++c) {
        // Rankine-Hugoniot: f(U_l) - f(U_r) = s (U_l - U_r).
        CHECK(std::abs((f_l[c] - f_r[c]) - s * (left[c] - right[c])) <= 1e-4);
    }
}

TEST_CASE("shu_osher_init: downstream profile") {
    const Grid1D grid(1000, -5.0, 10.0);
    const auto scales = scales3(1e-4);
    const EulerIntegerState state = shu_osher_init(grid, scales);

    // Cell nearest x=0 has rho = 1 + 0.2 sin(5x) with |x| <= dx/2.
    double best = 1e9;
    std::size_t i0 = 0;
    for (std::size_t i = 0; i < grid.n_cells; ++i) {
        if (std::abs(grid.x(i)) < best) {
            best = std::abs(grid.x(i));
            i0 = i;
        }
    }
    const double rho0 = scales[0].delta * static_cast<double>(state.rho_q[i0]);
    CHECK(rho0 == doctest::Approx(1.0 + 0.2 * std::sin(5.0 * grid.x(i0))).epsilon(1e-3));

    // Downstream mean density 1 with amplitude 0.2.
    double lo = 1e9, hi = -1e9;
    for (std::size_t i = 0; i < grid.n_cells; ++i) {
        if (grid.x(i) < -4.0) continue;
        const double r = scales[0].delta * static_cast<double>(state.rho_q[i]);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(lo == doctest::Approx(0.8).epsilon(1e-3));
    CHECK(hi == doctest::Approx(1.2).epsilon(1e-3));
}

TEST_CASE("euler_step: uniform gas is a fixed point") {
    const Grid1D grid(64, -5.0, 10.0);
    const auto scales = scales3(1e-4);
    const double gamma = 1.4;

    EulerIntegerState s;
    s.scales = scales;
    RealField rho(64, 1.0), mom(64, 0.5), ene(64, 2.7);
    s.rho_q = quantize(rho, scales[0]);
    s.mom_q = quantize(mom, scales[1]);
    s.ene_q = quantize(ene, scales[2]);

    EulerParams p{gamma, 1e-3, grid.dx(), scales, Boundary::FixedExtrapolation};
    std::array<TransferLedger, 3> ledgers{};
    const EulerIntegerState next = euler_step(s, p, ledgers);
    CHECK(next.rho_q == s.rho_q);
    CHECK(next.mom_q == s.mom_q);
    CHECK(next.ene_q == s.ene_q);
}

TEST_CASE("euler_step: periodic per-component conservation") {
    const Grid1D grid(200, -5.0, 10.0);
    const auto scales = scales3(1e-4);
    const double gamma = 1.4;

    EulerIntegerState s;
    s.scales = scales;
    RealField rho(200), mom(200), ene(200);
    for (std::size_t i = 0; i < 200; ++i) {
        const double x = grid.x(i);
        const double r = 1.0 + 0.2 * std::sin(0.2 * std::numbers::pi * x);
        const double u = 0.1 * std::sin(0.2 * std::numbers::pi * x);
        const double p = 1.0 + 0.1 * std::cos(0.2 * std::numbers::pi * x);
        rho[i] = r;
        mom[i] = r * u;
        ene[i] = p / (gamma - 1.0) + 0.5 * r * u * u;
    }
    s.rho_q = quantize(rho, scales[0]);
    s.mom_q = quantize(mom, scales[1]);
    s.ene_q = quantize(ene, scales[2]);

    const std::int64_t m_rho = total_mass(s.rho_q);
    const std::int64_t m_mom = total_mass(s.mom_q);
    const std::int64_t m_ene = total_mass(s.ene_q);

    std::array<TransferLedger, 3> ledgers{};
    for (int step = 0; step < 50; ++step) {
        const double alpha = max_signal_speed(s, 1.4);
        EulerParams p{1.4, 0.9 * grid.dx() / alpha, grid.dx(), scales,
                      Boundary::Periodic};
        s = euler_step(s, p, ledgers);
        CHECK(total_mass(s.rho_q) == m_rho);
        CHECK(total_mass(s.mom_q) == m_mom);
        CHECK(total_mass(s.ene_q) == m_ene);
    }
}

TEST_CASE("euler_step: exact ledger identity from the Shu-Osher IC") {
    const Grid1D grid(400, -5.0, 10.0);
    const auto scales = scales3(1e-4);
    EulerIntegerState s = shu_osher_init(grid, scales);

    std::array<TransferLedger, 3> ledgers{};
    const std::array<std::int64_t, 3> before{total_mass(s.rho_q), total_mass(s.mom_q),
                                             total_mass(s.ene_q)};
    const double alpha = max_signal_speed(s, 1.4);
    EulerParams p{1.4, 0.9 * grid.dx() / alpha, grid.dx(), scales,
                  Boundary::FixedExtrapolation};
    s = euler_step(s, p, ledgers);
    const std::array<std::int64_t, 3> after{total_mass(s.rho_q), total_mass(s.mom_q),
                                            total_mass(s.ene_q)};
    for (std::size_t c = 0; c < 3; ++c) {
        CHECK(after[c] == before[c] - ledgers[c].left_boundary_outflow -
                              ledgers[c].right_boundary_outflow);
    }
}

TEST_CASE("euler_step: CFL violation is fatal") {
    const Grid1D grid(100, -5.0, 10.0);
    const auto scales = scales3(1e-4);
    EulerIntegerState s = shu_osher_init(grid, scales);
    EulerParams p{1.4, 10.0 * grid.dx(), grid.dx(), scales,
                  Boundary::FixedExtrapolation};
    std::array<TransferLedger, 3> ledgers{};
    CHECK_THROWS_AS(euler_step(s, p, ledgers), CflError);
}
