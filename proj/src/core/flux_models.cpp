#include "flux_models.hpp"

#include <algorithm>
#include <cmath>

namespace fqnm {

FluxModel advection_model(double a) {
    FluxModel m;
    m.name = "advection";
    m.f = [a](double u) { return a * u; };
    if (a >= 0.0) {
        m.f_plus = [a](double u) { return a * u; };
        m.f_minus = [](double) { return 0.0; };
    } else {
        m.f_plus = [](double) { return 0.0; };
        m.f_minus = [a](double u) { return a * u; };
    }
    m.max_wave_speed = [a](double, double) { return std::abs(a); };
    return m;
}

FluxModel burgers_model() {
    FluxModel m;
    m.name = "burgers";
    m.f = [](double u) { return 0.5 * u * u; };
    m.f_plus = [](double u) {
        const double up = std::max(u, 0.0);
        return 0.5 * up * up;
    };
    m.f_minus = [](double u) {
        const double um = std::min(u, 0.0);
        return 0.5 * um * um;
    };
    m.max_wave_speed = [](double u_lo, double u_hi) {
        return std::max(std::abs(u_lo), std::abs(u_hi));
    };
    return m;
}

}  // namespace fqnm
