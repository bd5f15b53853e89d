#include "schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "baselines.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "transfer.hpp"

namespace fqnm {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Fqnm: return "fqnm";
        case Scheme::Upwind1: return "upwind1";
        case Scheme::Weno5: return "weno5";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "fqnm") return Scheme::Fqnm;
    if (name == "upwind1") return Scheme::Upwind1;
    if (name == "weno5") return Scheme::Weno5;
    throw ConfigError("unknown scheme '" + name + "' (expected fqnm, upwind1, weno5)");
}

RealField advance_to_time(Scheme scheme, const RealField& u0,
                          const FluxModel& model, const Grid1D& grid,
                          double cfl, double delta, double t_final,
                          Boundary boundary) {
    if (t_final <= 0.0) return u0;
    const double dx = grid.dx();
    const auto [lo, hi] = std::minmax_element(u0.begin(), u0.end());
    const double speed = std::max(model.max_wave_speed(*lo, *hi), 1e-300);
    const double dt_cap = cfl * dx / speed;
    const auto n_steps = static_cast<std::int64_t>(std::ceil(t_final / dt_cap - 1e-12));
    const double dt = t_final / static_cast<double>(n_steps);

    StepParams p{dt, dx, QuantScale{delta}, model, boundary};

    switch (scheme) {
        case Scheme::Fqnm: {
            IntegerField q = quantize(u0, p.scale);
            TransferLedger ledger;
            for (std::int64_t s = 0; s < n_steps; ++s) {
                q = conservative_step(q, p, ledger);
            }
            return dequantize(q, p.scale);
        }
        case Scheme::Upwind1: {
            RealField u = u0;
            for (std::int64_t s = 0; s < n_steps; ++s) u = upwind_step(u, p);
            return u;
        }
        case Scheme::Weno5: {
            RealField u = u0;
            for (std::int64_t s = 0; s < n_steps; ++s) u = weno5_step(u, p);
            return u;
        }
    }
    return u0;
}

double frequency_sweep_point(double k_normalized, Scheme scheme,
                             std::size_t n_cells, double delta, double cfl) {
    if (!(k_normalized > 0.0 && k_normalized <= 1.0)) {
        throw ConfigError("k_normalized must lie in (0, 1]");
    }
    const double L = 1.0;
    const Grid1D grid(n_cells, 0.0, L);
    const double dx = grid.dx();
    GaussianPacket packet{L / 2.0, L / 16.0, k_normalized * std::numbers::pi / dx};

    RealField u0(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) u0[i] = packet(grid.x(i));

    // One full transit at unit speed returns the exact solution to u0.
    const double effective_cfl = scheme == Scheme::Weno5 ? std::min(cfl, 0.45) : cfl;
    const RealField u = advance_to_time(scheme, u0, advection_model(1.0), grid,
                                        effective_cfl, delta, L);

    RealField exact(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) {
        exact[i] = exact_advection(packet, L, 1.0, L, grid.x(i));
    }
    const ErrorReport rep = error_norms(u, exact, dx);
    return rep.l2_relative.value_or(0.0);
}

}  // namespace fqnm
