#include "euler.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fqnm {

namespace {

EulerTriple physical_flux(const EulerTriple& state, double gamma) {
    const double rho = state[0], mom = state[1], ene = state[2];
    const double p = pressure(rho, mom, ene, gamma);
    const double u = mom / rho;
    return {mom, mom * u + p, u * (ene + p)};
}

EulerTriple dequantized_cell(const EulerIntegerState& s, std::size_t i) {
    return {s.scales[0].delta * static_cast<double>(s.rho_q[i]),
            s.scales[1].delta * static_cast<double>(s.mom_q[i]),
            s.scales[2].delta * static_cast<double>(s.ene_q[i])};
}

}  // namespace

double pressure(double rho, double mom, double ene, double gamma) {
    if (!(rho > 0.0)) {
        throw PositivityError("pressure: nonpositive density " + std::to_string(rho));
    }
    return (gamma - 1.0) * (ene - mom * mom / (2.0 * rho));
}

std::pair<EulerTriple, EulerTriple> lf_split_flux(const EulerTriple& state,
                                                  double gamma, double alpha) {
    const EulerTriple f = physical_flux(state, gamma);
    EulerTriple fp, fm;
    for (int c = 0; c < 3; ++c) {
        fp[c] = 0.5 * (f[c] + alpha * state[c]);
        fm[c] = 0.5 * (f[c] - alpha * state[c]);
    }
    return {fp, fm};
}

double max_signal_speed(const EulerIntegerState& s, double gamma) {
    double alpha = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const EulerTriple U = dequantized_cell(s, i);
        const double p = pressure(U[0], U[1], U[2], gamma);
        if (!(p > 0.0)) {
            throw PositivityError("nonpositive pressure " + std::to_string(p) +
                                  " at cell " + std::to_string(i));
        }
        const double u = U[1] / U[0];
        const double c = std::sqrt(gamma * p / U[0]);
        alpha = std::max(alpha, std::abs(u) + c);
    }
    return alpha;
}

EulerIntegerState euler_step(const EulerIntegerState& s, const EulerParams& p,
                             std::array<TransferLedger, 3>& ledgers) {
    const std::size_t n = s.size();
    const double lambda = p.dt / p.dx;
    const double alpha = max_signal_speed(s, p.gamma);
    if (lambda * alpha > 1.0 + 1e-12) {
        throw CflError("euler_step: CFL " + std::to_string(lambda * alpha) + " > 1");
    }

    // Per-cell rounded split transfers, componentwise.
    std::vector<std::array<std::int64_t, 3>> phip(n), phim(n);
    for (std::size_t i = 0; i < n; ++i) {
        const EulerTriple U = dequantized_cell(s, i);
        const auto [fp, fm] = lf_split_flux(U, p.gamma, alpha);
        for (std::size_t c = 0; c < 3; ++c) {
            const double dc = p.scales[c].delta;
            phip[i][c] = round_half_away(lambda * fp[c] / dc);
            phim[i][c] = round_half_away(lambda * fm[c] / dc);
        }
    }

    EulerIntegerState out = s;
    IntegerField* comps_out[3] = {&out.rho_q, &out.mom_q, &out.ene_q};
    const IntegerField* comps_src[3] = {&s.rho_q, &s.mom_q, &s.ene_q};

    for (std::size_t c = 0; c < 3; ++c) {
        const IntegerField& q = *comps_src[c];
        IntegerField& next = *comps_out[c];
        std::vector<std::int64_t> face(n + 1);
        if (p.boundary == Boundary::Periodic) {
            for (std::size_t i = 0; i < n; ++i) {
                face[i + 1] = phip[i][c] + phim[(i + 1) % n][c];
            }
            face[0] = face[n];
        } else {
            face[0] = phip[0][c] + phim[0][c];
            for (std::size_t i = 0; i + 1 < n; ++i) {
                face[i + 1] = phip[i][c] + phim[i + 1][c];
            }
            face[n] = phip[n - 1][c] + phim[n - 1][c];
        }
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = q[i] - (face[i + 1] - face[i]);
        }
        if (p.boundary != Boundary::Periodic) {
            ledgers[c].left_boundary_outflow += -face[0];
            ledgers[c].right_boundary_outflow += face[n];
        }
        ledgers[c].step_count += 1;
    }
    return out;
}

EulerIntegerState shu_osher_init(const Grid1D& grid,
                                 const std::array<QuantScale, 3>& scales) {
    const double gamma = 1.4;
    const std::size_t n = grid.n_cells;
    RealField rho(n), mom(n), ene(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i);
        double r, u, p;
        if (x < -4.0) {
            r = 3.857143;
            u = 2.629369;
            p = 10.33333;
        } else {
            r = 1.0 + 0.2 * std::sin(5.0 * x);
            u = 0.0;
            p = 1.0;
        }
        rho[i] = r;
        mom[i] = r * u;
        ene[i] = p / (gamma - 1.0) + 0.5 * r * u * u;
    }
    EulerIntegerState s;
    s.scales = scales;
    s.rho_q = quantize(rho, scales[0]);
    s.mom_q = quantize(mom, scales[1]);
    s.ene_q = quantize(ene, scales[2]);
    return s;
}

}  // namespace fqnm
