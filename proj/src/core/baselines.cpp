#include "baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace fqnm {

namespace {

void check_float_cfl(const RealField& u, const StepParams& p, double limit,
                     const char* scheme) {
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    const double cfl = p.lambda() * p.model.max_wave_speed(*lo, *hi);
    if (cfl > limit + 1e-12) {
        throw CflError(std::string(scheme) + ": CFL " + std::to_string(cfl) +
                       " exceeds limit " + std::to_string(limit));
    }
}

constexpr double kWenoEps = 1e-6;

}  // namespace

double weno5_reconstruct(double v0, double v1, double v2, double v3, double v4) {
    const double p0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0;
    const double p1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0;
    const double p2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0;

    const double b0 = 13.0 / 12.0 * (v0 - 2.0 * v1 + v2) * (v0 - 2.0 * v1 + v2) +
                      0.25 * (v0 - 4.0 * v1 + 3.0 * v2) * (v0 - 4.0 * v1 + 3.0 * v2);
    const double b1 = 13.0 / 12.0 * (v1 - 2.0 * v2 + v3) * (v1 - 2.0 * v2 + v3) +
                      0.25 * (v1 - v3) * (v1 - v3);
    const double b2 = 13.0 / 12.0 * (v2 - 2.0 * v3 + v4) * (v2 - 2.0 * v3 + v4) +
                      0.25 * (3.0 * v2 - 4.0 * v3 + v4) * (3.0 * v2 - 4.0 * v3 + v4);

    double w0 = 0.1 / ((kWenoEps + b0) * (kWenoEps + b0));
    double w1 = 0.6 / ((kWenoEps + b1) * (kWenoEps + b1));
    double w2 = 0.3 / ((kWenoEps + b2) * (kWenoEps + b2));
    const double ws = w0 + w1 + w2;
    return (w0 * p0 + w1 * p1 + w2 * p2) / ws;
}

namespace {

// Semi-discrete WENO5 right-hand side, periodic.
RealField weno5_rhs(const RealField& u, const StepParams& p) {
    const std::size_t n = u.size();
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    const double alpha = p.model.max_wave_speed(*lo, *hi);

    std::vector<double> gp(n), gm(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = p.model.f(u[i]);
        gp[i] = 0.5 * (fi + alpha * u[i]);
        gm[i] = 0.5 * (fi - alpha * u[i]);
    }

    const auto at = [n](const std::vector<double>& v, std::ptrdiff_t i) {
        return v[static_cast<std::size_t>(((i % static_cast<std::ptrdiff_t>(n)) +
                                           static_cast<std::ptrdiff_t>(n)) %
                                          static_cast<std::ptrdiff_t>(n))];
    };

    // hhat[i] approximates the flux at interface i+1/2.
    std::vector<double> hhat(n);
    for (std::size_t ui = 0; ui < n; ++ui) {
        const auto i = static_cast<std::ptrdiff_t>(ui);
        const double hp = weno5_reconstruct(at(gp, i - 2), at(gp, i - 1), at(gp, i),
                                     at(gp, i + 1), at(gp, i + 2));
        // Right-biased stencil for the negative part, mirrored about i+1/2.
        const double hm = weno5_reconstruct(at(gm, i + 3), at(gm, i + 2), at(gm, i + 1),
                                     at(gm, i), at(gm, i - 1));
        hhat[ui] = hp + hm;
    }

    RealField rhs(n);
    for (std::size_t ui = 0; ui < n; ++ui) {
        const auto i = static_cast<std::ptrdiff_t>(ui);
        const double h_left = at(hhat, i - 1);
        rhs[ui] = -(hhat[ui] - h_left) / p.dx;
    }
    return rhs;
}

}  // namespace

RealField upwind_step(const RealField& u, const StepParams& p) {
    check_float_cfl(u, p, 1.0, "upwind_step");
    const std::size_t n = u.size();
    const double lam = p.lambda();

    std::vector<double> face(n + 1);
    if (p.boundary == Boundary::Periodic) {
        for (std::size_t i = 0; i < n; ++i) {
            face[i + 1] = p.model.f_plus(u[i]) + p.model.f_minus(u[(i + 1) % n]);
        }
        face[0] = face[n];
    } else {
        face[0] = p.model.f_plus(u[0]) + p.model.f_minus(u[0]);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            face[i + 1] = p.model.f_plus(u[i]) + p.model.f_minus(u[i + 1]);
        }
        face[n] = p.model.f_plus(u[n - 1]) + p.model.f_minus(u[n - 1]);
    }

    RealField next(n);
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = u[i] - lam * (face[i + 1] - face[i]);
    }
    return next;
}

RealField weno5_step(const RealField& u, const StepParams& p) {
    if (p.boundary != Boundary::Periodic) {
        throw ConfigError("weno5_step supports periodic boundaries only");
    }
    if (u.size() < 7) throw ConfigError("weno5_step requires N >= 7");
    check_float_cfl(u, p, 0.5, "weno5_step");

    const double dt = p.dt;
    const std::size_t n = u.size();

    RealField k1 = weno5_rhs(u, p);
    RealField u1(n);
    for (std::size_t i = 0; i < n; ++i) u1[i] = u[i] + dt * k1[i];

    RealField k2 = weno5_rhs(u1, p);
    RealField u2(n);
    for (std::size_t i = 0; i < n; ++i) {
        u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * k2[i]);
    }

    RealField k3 = weno5_rhs(u2, p);
    RealField out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = u[i] / 3.0 + 2.0 / 3.0 * (u2[i] + dt * k3[i]);
    }
    return out;
}

double float_mass_drift(const std::vector<double>& mass_history) {
    if (mass_history.size() < 2) {
        throw std::invalid_argument("float_mass_drift needs at least 2 sums");
    }
    double drift = 0.0;
    for (double m : mass_history) {
        drift = std::max(drift, std::abs(m - mass_history.front()));
    }
    return drift;
}

}  // namespace fqnm
