#pragma once

#include <cstdint>
#include <vector>

#include "flux_models.hpp"
#include "grid.hpp"
#include "quantization.hpp"

namespace fqnm {

struct StepParams {
    double dt;
    double dx;
    QuantScale scale;
    FluxModel model;
    Boundary boundary = Boundary::Periodic;

    double lambda() const { return dt / dx; }
};

// Exact integer account of mass crossing the domain boundaries.
// For periodic runs both entries stay zero. Sign convention:
// outflow is mass that left the domain, so at every step
//   sum(q_new) = sum(q_old) - left_outflow_step - right_outflow_step.
struct TransferLedger {
    std::int64_t left_boundary_outflow = 0;
    std::int64_t right_boundary_outflow = 0;
    std::int64_t step_count = 0;
};

// phi^{+-}(q) = round(lambda * f^{+-}(delta*q) / delta), one rounding.
std::int64_t phi_plus(std::int64_t q, const StepParams& p);
std::int64_t phi_minus(std::int64_t q, const StepParams& p);

// F_{i+1/2} = phi_plus(q_i) + phi_minus(q_{i+1}).
std::int64_t interface_transfer(std::int64_t q_left, std::int64_t q_right,
                                const StepParams& p);

// q_i^{n+1} = q_i^n - (F_{i+1/2} - F_{i-1/2}). Throws CflError if
// lambda * max_wave_speed over the current field range exceeds 1.
IntegerField conservative_step(const IntegerField& q, const StepParams& p,
                               TransferLedger& ledger);

// Exact 128-bit accumulation; order-independent by exactness.
std::int64_t total_mass(const IntegerField& q);

struct RunRecord {
    std::vector<std::pair<std::int64_t, IntegerField>> snapshots;  // (step, field)
    std::vector<std::int64_t> mass_series;  // per step, including step 0
    TransferLedger ledger;
    IntegerField final_state;
};

// Iterates conservative_step; snapshot_stride = 0 keeps only the endpoints.
RunRecord run(const IntegerField& q0, const StepParams& p, std::int64_t n_steps,
              std::int64_t snapshot_stride = 0);

}  // namespace fqnm
