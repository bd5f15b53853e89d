#pragma once

#include <array>
#include <cstdint>

#include "grid.hpp"
#include "quantization.hpp"
#include "transfer.hpp"

namespace fqnm {

// Conserved triple (density, momentum, total energy).
using EulerTriple = std::array<double, 3>;

struct EulerIntegerState {
    IntegerField rho_q;
    IntegerField mom_q;
    IntegerField ene_q;
    std::array<QuantScale, 3> scales;

    std::size_t size() const { return rho_q.size(); }
};

struct EulerParams {
    double gamma = 1.4;
    double dt = 0.0;
    double dx = 0.0;
    std::array<QuantScale, 3> scales;
    Boundary boundary = Boundary::FixedExtrapolation;
};

// Ideal-gas closure; throws PositivityError when rho <= 0.
double pressure(double rho, double mom, double ene, double gamma);

// Global Lax-Friedrichs split: f_pm = (f(U) +- alpha*U)/2 componentwise.
// alpha must dominate |u| + sound speed over the domain.
std::pair<EulerTriple, EulerTriple> lf_split_flux(const EulerTriple& state,
                                                  double gamma, double alpha);

// max over cells of |u| + sqrt(gamma p / rho) for the dequantized state.
// Throws PositivityError naming the first cell with rho <= 0 or p <= 0.
double max_signal_speed(const EulerIntegerState& s, double gamma);

// Componentwise rounded integer transfer with LF splitting; each
// component keeps its own exact boundary ledger.
EulerIntegerState euler_step(const EulerIntegerState& s, const EulerParams& p,
                             std::array<TransferLedger, 3>& ledgers);

// Mach-3 shock at x = -4 running into a sinusoidally perturbed density.
EulerIntegerState shu_osher_init(const Grid1D& grid,
                                 const std::array<QuantScale, 3>& scales);

}  // namespace fqnm
