#pragma once

#include <cstdint>
#include <vector>

namespace fqnm {

using IntegerField = std::vector<std::int64_t>;
using RealField = std::vector<double>;

// Overflow guard for one transfer step of headroom.
constexpr std::int64_t kQuantumGuard = std::int64_t{1} << 62;

// Quantization scale: physical value per integer quantum. Rounding is
// half-away-from-zero everywhere, which keeps the map sign-symmetric.
struct QuantScale {
    double delta;
};

// Single rounding point shared by quantize() and the transfer operator.
std::int64_t round_half_away(double x);

IntegerField quantize(const RealField& u, QuantScale scale);
RealField dequantize(const IntegerField& q, QuantScale scale);

// Returns max_i |u_i - delta * round(u_i/delta)|; bounded by delta/2.
double check_quantization_bound(const RealField& u, QuantScale scale);

}  // namespace fqnm
