#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "flux_models.hpp"
#include "quantization.hpp"

namespace fqnm {

// u0(x) = sin(2*pi*x/L), periodic with zero mean.
struct SineIC {
    double length = 1.0;
    double operator()(double x) const;
    // Antiderivative from 0: integral of u0 over [0, y].
    double primitive(double y) const;
    // Shock formation time L/(2*pi).
    double breaking_time() const;
};

// Envelope-times-carrier dispersion test signal.
struct GaussianPacket {
    double center;
    double sigma;
    double wavenumber;
    double operator()(double x) const;
};

// Entropy solution of Burgers with the sine IC via minimization of
// G(y) = (x-y)^2/(2t) + U0(y); dense scan then ternary refinement.
// Ties break toward the smaller minimizer.
double hopf_lax(double x, double t, const SineIC& ic);

// Characteristic tracing u = u0(x - u t) by bisection; valid for
// t < breaking_time only. Independent cross-check of hopf_lax.
double trace_characteristic(double x, double t, const SineIC& ic);

// u(x,t) = u0((x - a t) mod L) for any periodic sampler on [0, L).
template <typename Sampler>
double exact_advection(const Sampler& u0, double length, double a, double t,
                       double x) {
    double y = x - a * t;
    y -= length * std::floor(y / length);
    return u0(y);
}

struct MonotoneReport {
    bool pass = true;
    std::int64_t checked = 0;
    std::string counterexample;  // empty when pass
};

// Exhaustively checks that H(q_{i-1}, q_i, q_{i+1}) is nondecreasing in
// each argument over [-Q, Q]^3 in unit steps. Refuses to run (throws
// CflError) when lambda * max_wave_speed(-delta*Q, delta*Q) > 1.
MonotoneReport verify_monotone_stencil(const FluxModel& model, double lambda,
                                       double delta, std::int64_t q_max);

}  // namespace fqnm
