#include "transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace fqnm {

namespace {

std::int64_t rounded_transfer(std::int64_t q, const StepParams& p,
                              const std::function<double(double)>& f_part) {
    const double u = p.scale.delta * static_cast<double>(q);
    // Exactly one rounding: the whole expression is evaluated in double
    // and rounded once, per the operator definition.
    const double raw = p.lambda() * f_part(u) / p.scale.delta;
    if (!(std::abs(raw) <= static_cast<double>(kQuantumGuard))) {
        throw OverflowError("transfer: phi overflow at q=" + std::to_string(q));
    }
    return std::llround(raw);
}

void check_cfl(const IntegerField& q, const StepParams& p) {
    const auto [lo, hi] = std::minmax_element(q.begin(), q.end());
    const double u_lo = p.scale.delta * static_cast<double>(*lo);
    const double u_hi = p.scale.delta * static_cast<double>(*hi);
    const double speed = p.model.max_wave_speed(u_lo, u_hi);
    const double cfl = p.lambda() * speed;
    if (cfl > 1.0 + 1e-12) {
        throw CflError("CFL violation: lambda*max_wave_speed = " +
                       std::to_string(cfl) + " > 1 (field range [" +
                       std::to_string(u_lo) + ", " + std::to_string(u_hi) + "])");
    }
}

}  // namespace

std::int64_t phi_plus(std::int64_t q, const StepParams& p) {
    return rounded_transfer(q, p, p.model.f_plus);
}

std::int64_t phi_minus(std::int64_t q, const StepParams& p) {
    return rounded_transfer(q, p, p.model.f_minus);
}

std::int64_t interface_transfer(std::int64_t q_left, std::int64_t q_right,
                                const StepParams& p) {
    return phi_plus(q_left, p) + phi_minus(q_right, p);
}

IntegerField conservative_step(const IntegerField& q, const StepParams& p,
                               TransferLedger& ledger) {
    const std::size_t n = q.size();
    check_cfl(q, p);

    // F[i] is the transfer across interface i-1/2 (left face of cell i);
    // F[n] is the right boundary face.
    std::vector<std::int64_t> face(n + 1);
    if (p.boundary == Boundary::Periodic) {
        for (std::size_t i = 0; i < n; ++i) {
            face[i + 1] = phi_plus(q[i], p) + phi_minus(q[(i + 1) % n], p);
        }
        face[0] = face[n];
    } else {
        // Ghost cells copy the boundary cell.
        face[0] = phi_plus(q[0], p) + phi_minus(q[0], p);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            face[i + 1] = phi_plus(q[i], p) + phi_minus(q[i + 1], p);
        }
        face[n] = phi_plus(q[n - 1], p) + phi_minus(q[n - 1], p);
    }

    IntegerField next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const __int128 updated = static_cast<__int128>(q[i]) - face[i + 1] + face[i];
        if (updated > static_cast<__int128>(kQuantumGuard) ||
            updated < -static_cast<__int128>(kQuantumGuard)) {
            throw OverflowError("conservative_step: cell " + std::to_string(i) +
                                " leaves the 2^62 quantum guard");
        }
        next[i] = static_cast<std::int64_t>(updated);
    }

    if (p.boundary != Boundary::Periodic) {
        ledger.left_boundary_outflow += -face[0];
        ledger.right_boundary_outflow += face[n];
    }
    ledger.step_count += 1;
    return next;
}

std::int64_t total_mass(const IntegerField& q) {
    __int128 sum = 0;
    for (std::int64_t v : q) sum += v;
    if (sum > static_cast<__int128>(INT64_MAX) ||
        sum < static_cast<__int128>(INT64_MIN)) {
        throw OverflowError("total_mass exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(sum);
}

RunRecord run(const IntegerField& q0, const StepParams& p, std::int64_t n_steps,
              std::int64_t snapshot_stride) {
    RunRecord rec;
    IntegerField q = q0;
    rec.mass_series.reserve(static_cast<std::size_t>(n_steps) + 1);
    rec.mass_series.push_back(total_mass(q));
    if (snapshot_stride > 0) rec.snapshots.emplace_back(0, q);
    for (std::int64_t s = 1; s <= n_steps; ++s) {
        q = conservative_step(q, p, rec.ledger);
        rec.mass_series.push_back(total_mass(q));
        if (snapshot_stride > 0 && s % snapshot_stride == 0) {
            rec.snapshots.emplace_back(s, q);
        }
    }
    rec.final_state = std::move(q);
    return rec;
}

}  // namespace fqnm
