#pragma once

#include <functional>
#include <string>

namespace fqnm {

// Scalar flux f with a monotone splitting f = f_plus + f_minus,
// f_plus nondecreasing and f_minus nonincreasing, plus a wave-speed
// bound over a state interval for CFL control.
struct FluxModel {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> f_plus;
    std::function<double(double)> f_minus;
    std::function<double(double, double)> max_wave_speed;  // (u_lo, u_hi)
};

// f(u) = a*u with the trivial upwind split.
FluxModel advection_model(double a);

// f(u) = u^2/2 with the Engquist-Osher split:
// f_plus = max(u,0)^2/2, f_minus = min(u,0)^2/2.
FluxModel burgers_model();

}  // namespace fqnm
