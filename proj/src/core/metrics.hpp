#pragma once

#include <optional>

#include "grid.hpp"
#include "quantization.hpp"

namespace fqnm {

struct ErrorReport {
    double l1 = 0.0;
    double linf = 0.0;
    std::optional<double> l2_relative;  // absent when the reference is zero
    std::size_t n_cells = 0;
    double time = 0.0;
};

struct ShockDiagnostics {
    double shock_position = 0.0;        // midpoint-crossing location
    double transition_width = 0.0;      // cells spanning 10% -> 90% of the jump
    double displacement_vs_reference = 0.0;  // positive = downstream of reference
};

ErrorReport error_norms(const RealField& numeric, const RealField& reference,
                        double dx);

// Locates the dominant monotone decreasing transition; absent when no
// transition exceeds 50% of the global range.
std::optional<ShockDiagnostics> locate_shock(const RealField& u, const Grid1D& grid);

}  // namespace fqnm
