#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqnm {

ErrorReport error_norms(const RealField& numeric, const RealField& reference,
                        double dx) {
    if (numeric.size() != reference.size()) {
        throw std::invalid_argument("error_norms: length mismatch");
    }
    ErrorReport rep;
    rep.n_cells = numeric.size();
    double l2_err = 0.0, l2_ref = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double e = numeric[i] - reference[i];
        rep.l1 += std::abs(e);
        rep.linf = std::max(rep.linf, std::abs(e));
        l2_err += e * e;
        l2_ref += reference[i] * reference[i];
    }
    rep.l1 *= dx;
    if (l2_ref > 0.0) rep.l2_relative = std::sqrt(l2_err) / std::sqrt(l2_ref);
    return rep;
}

std::optional<ShockDiagnostics> locate_shock(const RealField& u, const Grid1D& grid) {
    const std::size_t n = u.size();
    if (n < 2) return std::nullopt;
    const auto [lo_it, hi_it] = std::minmax_element(u.begin(), u.end());
    const double range = *hi_it - *lo_it;
    if (range <= 0.0) return std::nullopt;

    // Largest-drop maximal nonincreasing run.
    std::size_t best_s = 0, best_e = 0;
    double best_drop = 0.0;
    std::size_t s = 0;
    while (s + 1 < n) {
        if (u[s + 1] > u[s]) {
            ++s;
            continue;
        }
        std::size_t e = s;
        while (e + 1 < n && u[e + 1] <= u[e]) ++e;
        const double drop = u[s] - u[e];
        if (drop > best_drop) {
            best_drop = drop;
            best_s = s;
            best_e = e;
        }
        s = e;
    }
    if (best_drop < 0.5 * range) return std::nullopt;

    const double top = u[best_s];
    const double bottom = u[best_e];
    const double dx = grid.dx();

    // Downward crossing of a level within the run, linearly interpolated
    // between cell centers.
    const auto crossing = [&](double level) {
        for (std::size_t i = best_s; i < best_e; ++i) {
            if (u[i] >= level && u[i + 1] <= level) {
                const double denom = u[i] - u[i + 1];
                const double frac = denom > 0.0 ? (u[i] - level) / denom : 0.5;
                return grid.x(i) + frac * dx;
            }
        }
        return grid.x(best_e);
    };

    ShockDiagnostics d;
    d.shock_position = crossing(0.5 * (top + bottom));
    const double jump = top - bottom;
    const double x_hi = crossing(top - 0.1 * jump);
    const double x_lo = crossing(bottom + 0.1 * jump);
    d.transition_width = std::max(1.0, (x_lo - x_hi) / dx);
    return d;
}

}  // namespace fqnm
