#pragma once

#include <string>

#include "flux_models.hpp"
#include "grid.hpp"
#include "quantization.hpp"

namespace fqnm {

enum class Scheme { Fqnm, Upwind1, Weno5 };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);  // throws ConfigError

// Advances u0 to t_final with fixed dt chosen from the initial field
// range: dt = cfl*dx/max_speed, shrunk so an integer number of steps
// lands exactly on t_final. The FQNM route quantizes at t=0 and
// dequantizes at the end; baselines stay in floating point throughout.
RealField advance_to_time(Scheme scheme, const RealField& u0,
                          const FluxModel& model, const Grid1D& grid,
                          double cfl, double delta, double t_final,
                          Boundary boundary = Boundary::Periodic);

// Builds the Gaussian packet with carrier k = k_normalized * pi / dx
// (1 = Nyquist), advects one domain transit at unit speed, and returns
// the relative L2 error against the exact advection solution.
double frequency_sweep_point(double k_normalized, Scheme scheme,
                             std::size_t n_cells, double delta, double cfl);

}  // namespace fqnm
