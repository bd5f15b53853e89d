#include "fqnm/fqnm.h"

#include <cstring>
#include <memory>
#include <string>

#include "../core/errors.hpp"
#include "../core/flux_models.hpp"
#include "../core/harness.hpp"
#include "../core/oracles.hpp"
#include "../core/transfer.hpp"

extern "C" {

struct fqnm_model {
    fqnm::FluxModel rep;
};

struct fqnm_sim {
    fqnm::StepParams params;
    fqnm::IntegerField state;
    fqnm::TransferLedger ledger;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

fqnm_status set_error(fqnm_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Maps the core exception taxonomy onto status codes.
template <typename Fn>
fqnm_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FQNM_OK;
    } catch (const fqnm::ConfigError& e) {
        return set_error(FQNM_ERR_CONFIG, e.what());
    } catch (const fqnm::CflError& e) {
        return set_error(FQNM_ERR_CFL, e.what());
    } catch (const fqnm::OverflowError& e) {
        return set_error(FQNM_ERR_OVERFLOW, e.what());
    } catch (const fqnm::PositivityError& e) {
        return set_error(FQNM_ERR_POSITIVITY, e.what());
    } catch (const std::exception& e) {
        return set_error(FQNM_ERR_RUNTIME, e.what());
    }
}

fqnm_status require(bool ok, const char* msg) {
    return ok ? FQNM_OK : set_error(FQNM_ERR_CONFIG, msg);
}

}  // namespace

extern "C" {

const char* fqnm_version(void) { return fqnm::kArtifactVersion; }

const char* fqnm_last_error(void) { return g_last_error.c_str(); }

fqnm_status fqnm_run_config_file(const char* config_path,
                                 const char* out_dir_override) {
    if (auto s = require(config_path != nullptr, "config_path is NULL")) return s;
    return guarded([&] {
        fqnm::ExperimentConfig cfg = fqnm::parse_config(config_path);
        if (out_dir_override != nullptr) {
            cfg.out_dir = out_dir_override;
            for (auto& [key, value] : cfg.resolved) {
                if (key == "out_dir") value = cfg.out_dir;
            }
        }
        fqnm::run_experiment(cfg);
    });
}

const char* fqnm_experiment_catalog(void) {
    static const std::string catalog = fqnm::experiment_catalog();
    return catalog.c_str();
}

fqnm_status fqnm_model_create_advection(double wave_speed, fqnm_model** out) {
    if (auto s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { *out = new fqnm_model{fqnm::advection_model(wave_speed)}; });
}

fqnm_status fqnm_model_create_burgers(fqnm_model** out) {
    if (auto s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { *out = new fqnm_model{fqnm::burgers_model()}; });
}

void fqnm_model_destroy(fqnm_model* model) { delete model; }

fqnm_status fqnm_sim_create(const fqnm_model* model, size_t n_cells,
                            double domain_length, double delta, double dt,
                            fqnm_boundary boundary, fqnm_sim** out) {
    if (auto s = require(model != nullptr && out != nullptr, "NULL handle")) return s;
    if (auto s = require(n_cells >= 2, "n_cells must be >= 2")) return s;
    if (auto s = require(delta > 0.0, "delta must be positive")) return s;
    if (auto s = require(dt > 0.0 && domain_length > 0.0,
                         "dt and domain_length must be positive")) {
        return s;
    }
    return guarded([&] {
        const double dx = domain_length / static_cast<double>(n_cells);
        const auto b = boundary == FQNM_BOUNDARY_PERIODIC
                           ? fqnm::Boundary::Periodic
                           : fqnm::Boundary::FixedExtrapolation;
        *out = new fqnm_sim{fqnm::StepParams{dt, dx, fqnm::QuantScale{delta},
                                             model->rep, b},
                            fqnm::IntegerField(n_cells, 0),
                            fqnm::TransferLedger{}};
    });
}

void fqnm_sim_destroy(fqnm_sim* sim) { delete sim; }

fqnm_status fqnm_sim_set_state(fqnm_sim* sim, const double* u, size_t n) {
    if (auto s = require(sim != nullptr && u != nullptr, "NULL handle")) return s;
    if (auto s = require(n == sim->state.size(), "length mismatch")) return s;
    return guarded([&] {
        sim->state = fqnm::quantize(fqnm::RealField(u, u + n), sim->params.scale);
    });
}

fqnm_status fqnm_sim_get_state(const fqnm_sim* sim, double* out, size_t n) {
    if (auto s = require(sim != nullptr && out != nullptr, "NULL handle")) return s;
    if (auto s = require(n == sim->state.size(), "length mismatch")) return s;
    for (size_t i = 0; i < n; ++i) {
        out[i] = sim->params.scale.delta * static_cast<double>(sim->state[i]);
    }
    return FQNM_OK;
}

fqnm_status fqnm_sim_get_integer_state(const fqnm_sim* sim, int64_t* out, size_t n) {
    if (auto s = require(sim != nullptr && out != nullptr, "NULL handle")) return s;
    if (auto s = require(n == sim->state.size(), "length mismatch")) return s;
    std::memcpy(out, sim->state.data(), n * sizeof(int64_t));
    return FQNM_OK;
}

fqnm_status fqnm_sim_step(fqnm_sim* sim, int64_t n_steps) {
    if (auto s = require(sim != nullptr, "NULL handle")) return s;
    if (auto s = require(n_steps >= 0, "n_steps must be nonnegative")) return s;
    return guarded([&] {
        for (int64_t i = 0; i < n_steps; ++i) {
            sim->state = fqnm::conservative_step(sim->state, sim->params, sim->ledger);
        }
    });
}

fqnm_status fqnm_sim_total_mass(const fqnm_sim* sim, int64_t* out) {
    if (auto s = require(sim != nullptr && out != nullptr, "NULL handle")) return s;
    return guarded([&] { *out = fqnm::total_mass(sim->state); });
}

fqnm_status fqnm_sim_ledger(const fqnm_sim* sim, int64_t* left_outflow,
                            int64_t* right_outflow, int64_t* step_count) {
    if (auto s = require(sim != nullptr, "NULL handle")) return s;
    if (left_outflow) *left_outflow = sim->ledger.left_boundary_outflow;
    if (right_outflow) *right_outflow = sim->ledger.right_boundary_outflow;
    if (step_count) *step_count = sim->ledger.step_count;
    return FQNM_OK;
}

fqnm_status fqnm_hopf_lax_sine(double x, double t, double domain_length,
                               double* out) {
    if (auto s = require(out != nullptr, "out is NULL")) return s;
    if (auto s = require(domain_length > 0.0, "domain_length must be positive")) return s;
    if (auto s = require(t >= 0.0, "t must be nonnegative")) return s;
    return guarded([&] { *out = fqnm::hopf_lax(x, t, fqnm::SineIC{domain_length}); });
}

}  // extern "C"
