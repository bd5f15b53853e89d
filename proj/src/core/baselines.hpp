#pragma once

#include <vector>

#include "flux_models.hpp"
#include "grid.hpp"
#include "quantization.hpp"
#include "transfer.hpp"

namespace fqnm {

// Floating-point reference schemes. These never touch integer state;
// they share StepParams for geometry and the flux model only.

// First-order upwind with the model's own splitting:
// u_i^{n+1} = u_i - lambda*(F_{i+1/2} - F_{i-1/2}),
// F = f_plus(u_left) + f_minus(u_right). CFL <= 1.
RealField upwind_step(const RealField& u, const StepParams& p);

// One SSP-RK3 step of fifth-order WENO (classical 1996 smoothness
// weights, epsilon = 1e-6) with global Lax-Friedrichs splitting.
// Periodic only; requires N >= 7 and CFL <= 0.5.
RealField weno5_step(const RealField& u, const StepParams& p);

// max_n |sum(u^n) - sum(u^0)| over a recorded history of field sums.
double float_mass_drift(const std::vector<double>& mass_history);

// Fifth-order reconstruction at the right face of the center cell from
// the left-biased five-point stencil (v0..v4). Exposed for oracle tests.
double weno5_reconstruct(double v0, double v1, double v2, double v3, double v4);

}  // namespace fqnm
