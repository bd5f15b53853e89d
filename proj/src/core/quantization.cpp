#include "quantization.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace fqnm {

std::int64_t round_half_away(double x) {
    // llround rounds halfway cases away from zero regardless of the FP
    // rounding mode, which is exactly the tie policy we fix.
    if (!(std::abs(x) <= static_cast<double>(kQuantumGuard))) {
        throw OverflowError("round_half_away: value " + std::to_string(x) +
                            " exceeds the 2^62 quantum guard");
    }
    return std::llround(x);
}

IntegerField quantize(const RealField& u, QuantScale scale) {
    IntegerField q(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double scaled = u[i] / scale.delta;
        if (!std::isfinite(scaled) ||
            !(std::abs(scaled) <= static_cast<double>(kQuantumGuard))) {
            throw OverflowError("quantize: entry " + std::to_string(i) +
                                " (value " + std::to_string(u[i]) +
                                ") leaves the 64-bit quantum range at delta " +
                                std::to_string(scale.delta));
        }
        q[i] = std::llround(scaled);
    }
    return q;
}

RealField dequantize(const IntegerField& q, QuantScale scale) {
    RealField u(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        u[i] = scale.delta * static_cast<double>(q[i]);
    }
    return u;
}

double check_quantization_bound(const RealField& u, QuantScale scale) {
    const IntegerField q = quantize(u, scale);
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double err = std::abs(u[i] - scale.delta * static_cast<double>(q[i]));
        if (err > worst) worst = err;
    }
    return worst;
}

}  // namespace fqnm
