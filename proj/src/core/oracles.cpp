#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace fqnm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double SineIC::operator()(double x) const { return std::sin(kTwoPi * x / length); }

double SineIC::primitive(double y) const {
    // int_0^y sin(2 pi s / L) ds
    return (length / kTwoPi) * (1.0 - std::cos(kTwoPi * y / length));
}

double SineIC::breaking_time() const { return length / kTwoPi; }

double GaussianPacket::operator()(double x) const {
    const double r = x - center;
    return std::exp(-r * r / (2.0 * sigma * sigma)) * std::cos(wavenumber * r);
}

double hopf_lax(double x, double t, const SineIC& ic) {
    if (t <= 0.0) return ic(x);

    const auto objective = [&](double y) {
        const double d = x - y;
        return d * d / (2.0 * t) + ic.primitive(y);
    };

    // |u0| <= 1, so the minimizer lies within t of x up to the IC's scale;
    // pad by L/4 for safety.
    const double pad = t * 1.0 + ic.length / 4.0;
    const double y_lo = x - pad;
    const double y_hi = x + pad;
    const int n_scan = 4096;
    const double h = (y_hi - y_lo) / n_scan;

    double best_y = y_lo;
    double best_g = objective(y_lo);
    for (int k = 1; k <= n_scan; ++k) {
        const double y = y_lo + k * h;
        const double g = objective(y);
        // Strict comparison keeps the smallest minimizing y on ties.
        if (g < best_g) {
            best_g = g;
            best_y = y;
        }
    }

    // Local ternary refinement around the best scan sample.
    double a = best_y - h;
    double b = best_y + h;
    while (b - a > 1e-10) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (objective(m1) <= objective(m2)) {
            b = m2;
        } else {
            a = m1;
        }
    }
    const double y_star = 0.5 * (a + b);
    return (x - y_star) / t;
}

double trace_characteristic(double x, double t, const SineIC& ic) {
    if (t >= ic.breaking_time()) {
        throw std::invalid_argument(
            "trace_characteristic is only valid before shock formation");
    }
    // g(u) = u - u0(x - u t) is strictly increasing for t < L/(2 pi).
    const auto g = [&](double u) { return u - ic(x - u * t); };
    double lo = -1.0 - 1e-9, hi = 1.0 + 1e-9;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

MonotoneReport verify_monotone_stencil(const FluxModel& model, double lambda,
                                       double delta, std::int64_t q_max) {
    const double u_max = delta * static_cast<double>(q_max);
    const double speed = model.max_wave_speed(-u_max, u_max);
    if (lambda * speed > 1.0 + 1e-12) {
        throw CflError("verify_monotone_stencil: lambda*max_wave_speed = " +
                       std::to_string(lambda * speed) +
                       " > 1; result would be meaningless");
    }

    const std::int64_t lo = -q_max, hi = q_max;
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::int64_t> pp(n), pm(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double u = delta * static_cast<double>(lo + static_cast<std::int64_t>(k));
        pp[k] = std::llround(lambda * model.f_plus(u) / delta);
        pm[k] = std::llround(lambda * model.f_minus(u) / delta);
    }

    const auto H = [&](std::size_t a, std::size_t b, std::size_t c) {
        return static_cast<std::int64_t>(lo + static_cast<std::int64_t>(b)) -
               pp[b] - pm[c] + pp[a] + pm[b];
    };

    MonotoneReport rep;
    const auto fail = [&](std::size_t a, std::size_t b, std::size_t c,
                          const char* arg) {
        rep.pass = false;
        std::ostringstream os;
        os << "H not nondecreasing in " << arg << " at (q_im1,q_i,q_ip1)=("
           << lo + static_cast<std::int64_t>(a) << ","
           << lo + static_cast<std::int64_t>(b) << ","
           << lo + static_cast<std::int64_t>(c) << ")";
        rep.counterexample = os.str();
    };

    for (std::size_t a = 0; a < n && rep.pass; ++a) {
        for (std::size_t b = 0; b < n && rep.pass; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                ++rep.checked;
                const std::int64_t h0 = H(a, b, c);
                if (a + 1 < n && H(a + 1, b, c) < h0) { fail(a, b, c, "q_im1"); break; }
                if (b + 1 < n && H(a, b + 1, c) < h0) { fail(a, b, c, "q_i"); break; }
                if (c + 1 < n && H(a, b, c + 1) < h0) { fail(a, b, c, "q_ip1"); break; }
            }
        }
    }
    return rep;
}

}  // namespace fqnm
