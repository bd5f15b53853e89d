#include "harness.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "baselines.hpp"
#include "errors.hpp"
#include "euler.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "transfer.hpp"

namespace fqnm {

namespace {

// ---------------------------------------------------------------------------
// Formatting: 17 significant digits so doubles round-trip exactly;
// integers printed as integers. Byte-identical across reruns.

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt(std::int64_t x) { return std::to_string(x); }

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
        : out_(path) {
        if (!out_) throw ConfigError("cannot open output file " + path.string());
        write_row(header);
    }

    void write_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << escape(cells[i]);
        }
        out_ << '\n';
    }

private:
    static std::string escape(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    }

    std::ofstream out_;
};

// Deterministic uniform doubles independent of libstdc++'s distribution
// internals; mt19937_64 output is pinned by the standard.
struct SeededUniform {
    std::mt19937_64 eng;
    explicit SeededUniform(std::uint64_t seed) : eng(seed) {}
    double operator()(double lo, double hi) {
        const double unit = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }
};

// ---------------------------------------------------------------------------
// Config parsing

struct RawEntry {
    std::string value;
    int line;
    bool consumed = false;
};

using RawMap = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

RawMap tokenize(const std::string& text, const std::string& origin) {
    RawMap raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        if (raw.count(key)) {
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": duplicate key: " + key);
        }
        raw[key] = RawEntry{value, lineno};
    }
    return raw;
}

class ConfigReader {
public:
    ConfigReader(RawMap raw, std::string origin, ExperimentConfig* cfg)
        : raw_(std::move(raw)), origin_(std::move(origin)), cfg_(cfg) {}

    std::string get_string(const std::string& key, const std::string& fallback) {
        std::string v = fallback;
        if (auto* e = take(key)) v = e->value;
        cfg_->resolved.emplace_back(key, v);
        return v;
    }

    double get_positive_real(const std::string& key, double fallback) {
        double v = fallback;
        if (auto* e = take(key)) v = parse_real(key, *e);
        if (!(v > 0.0)) throw ConfigError(key + " must be positive");
        cfg_->resolved.emplace_back(key, fmt(v));
        return v;
    }

    std::int64_t get_positive_int(const std::string& key, std::int64_t fallback) {
        std::int64_t v = fallback;
        if (auto* e = take(key)) v = parse_int(key, *e);
        if (v <= 0) throw ConfigError(key + " must be positive");
        cfg_->resolved.emplace_back(key, fmt(v));
        return v;
    }

    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) {
        std::uint64_t v = fallback;
        if (auto* e = take(key)) {
            try {
                v = std::stoull(e->value);
            } catch (const std::exception&) {
                fail_type(key, *e, "unsigned integer");
            }
        }
        cfg_->resolved.emplace_back(key, std::to_string(v));
        return v;
    }

    std::vector<double> get_positive_real_list(const std::string& key,
                                               const std::string& fallback) {
        std::string text = fallback;
        if (auto* e = take(key)) text = e->value;
        std::vector<double> out;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            double v;
            try {
                std::size_t pos = 0;
                v = std::stod(item, &pos);
                if (pos != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ConfigError(key + ": '" + item + "' is not a number");
            }
            if (!(v > 0.0)) throw ConfigError(key + " entries must be positive");
            out.push_back(v);
        }
        if (out.empty()) throw ConfigError(key + " must not be empty");
        cfg_->resolved.emplace_back(key, text);
        return out;
    }

    std::vector<Scheme> get_scheme_list(const std::string& key,
                                        const std::string& fallback) {
        std::string text = fallback;
        if (auto* e = take(key)) text = e->value;
        std::vector<Scheme> out;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (!item.empty()) out.push_back(scheme_from_name(item));
        }
        if (out.empty()) throw ConfigError(key + " must name at least one scheme");
        cfg_->resolved.emplace_back(key, text);
        return out;
    }

    void reject_unknown() const {
        for (const auto& [key, entry] : raw_) {
            if (!entry.consumed) {
                throw ConfigError(origin_ + ":" + std::to_string(entry.line) +
                                  ": unknown key: " + key);
            }
        }
    }

private:
    RawEntry* take(const std::string& key) {
        auto it = raw_.find(key);
        if (it == raw_.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }

    double parse_real(const std::string& key, const RawEntry& e) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(e.value, &pos);
            if (pos != e.value.size()) throw std::invalid_argument(e.value);
            return v;
        } catch (const std::exception&) {
            fail_type(key, e, "number");
        }
        return 0.0;
    }

    std::int64_t parse_int(const std::string& key, const RawEntry& e) const {
        try {
            std::size_t pos = 0;
            const std::int64_t v = std::stoll(e.value, &pos);
            if (pos != e.value.size()) throw std::invalid_argument(e.value);
            return v;
        } catch (const std::exception&) {
            fail_type(key, e, "integer");
        }
        return 0;
    }

    [[noreturn]] void fail_type(const std::string& key, const RawEntry& e,
                                const char* want) const {
        throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key " + key +
                          ": '" + e.value + "' is not a valid " + want);
    }

    RawMap raw_;
    std::string origin_;
    ExperimentConfig* cfg_;
};

FluxModel model_from_config(const ExperimentConfig& cfg) {
    if (cfg.model == "burgers") return burgers_model();
    if (cfg.model == "advection") return advection_model(cfg.advection_speed);
    throw ConfigError("unknown model '" + cfg.model +
                      "' (expected advection or burgers)");
}

void write_manifest(const ExperimentConfig& cfg) {
    const std::filesystem::path path =
        std::filesystem::path(cfg.out_dir) / (cfg.experiment + ".manifest.txt");
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open manifest " + path.string());
    out << "artifact_version = " << kArtifactVersion << '\n';
    for (const auto& [key, value] : cfg.resolved) {
        out << key << " = " << value << '\n';
    }
}

std::filesystem::path csv_path(const ExperimentConfig& cfg) {
    return std::filesystem::path(cfg.out_dir) / (cfg.experiment + ".csv");
}

// ---------------------------------------------------------------------------
// Experiments

void run_advect_sweep(const ExperimentConfig& cfg) {
    CsvWriter csv(csv_path(cfg), {"k_normalized", "scheme", "l2_relative"});
    for (int j = 1; j <= 10; ++j) {
        const double k = 0.1 * j;
        for (Scheme s : cfg.schemes) {
            const double err = frequency_sweep_point(k, s, cfg.n_cells, cfg.delta, cfg.cfl);
            csv.write_row({fmt(k), scheme_name(s), fmt(err)});
        }
    }
}

void run_burgers_shock(const ExperimentConfig& cfg, bool zoom) {
    const double L = 1.0;
    const Grid1D grid(cfg.n_cells, 0.0, L);
    const SineIC ic{L};

    RealField u0(cfg.n_cells);
    for (std::size_t i = 0; i < cfg.n_cells; ++i) u0[i] = ic(grid.x(i));

    const FluxModel model = burgers_model();
    const RealField u_fqnm =
        advance_to_time(Scheme::Fqnm, u0, model, grid, cfg.cfl, cfg.delta, cfg.t_final);
    const RealField u_up =
        advance_to_time(Scheme::Upwind1, u0, model, grid, cfg.cfl, cfg.delta, cfg.t_final);
    const RealField u_weno = advance_to_time(Scheme::Weno5, u0, model, grid,
                                             std::min(cfg.cfl, 0.45), cfg.delta, cfg.t_final);

    CsvWriter csv(csv_path(cfg), {"x", "u_fqnm", "u_upwind1", "u_weno5", "u_hopflax"});
    for (std::size_t i = 0; i < cfg.n_cells; ++i) {
        const double x = grid.x(i);
        if (zoom && std::abs(x - L / 2.0) > cfg.window) continue;
        csv.write_row({fmt(x), fmt(u_fqnm[i]), fmt(u_up[i]), fmt(u_weno[i]),
                       fmt(hopf_lax(x, cfg.t_final, ic))});
    }
}

void run_shu_osher(const ExperimentConfig& cfg) {
    const Grid1D grid(cfg.n_cells, -5.0, 10.0);
    const std::array<QuantScale, 3> scales{QuantScale{cfg.delta}, QuantScale{cfg.delta},
                                           QuantScale{cfg.delta}};
    EulerIntegerState state = shu_osher_init(grid, scales);

    const std::filesystem::path ledger_path =
        std::filesystem::path(cfg.out_dir) / (cfg.experiment + "_ledger.csv");
    CsvWriter ledger_csv(ledger_path,
                         {"step", "rho_mass", "mom_mass", "ene_mass", "rho_outflow",
                          "mom_outflow", "ene_outflow"});

    std::array<TransferLedger, 3> ledgers{};
    const auto masses = [](const EulerIntegerState& s) {
        return std::array<std::int64_t, 3>{total_mass(s.rho_q), total_mass(s.mom_q),
                                           total_mass(s.ene_q)};
    };
    const auto outflows = [&]() {
        return std::array<std::int64_t, 3>{
            ledgers[0].left_boundary_outflow + ledgers[0].right_boundary_outflow,
            ledgers[1].left_boundary_outflow + ledgers[1].right_boundary_outflow,
            ledgers[2].left_boundary_outflow + ledgers[2].right_boundary_outflow};
    };

    auto m = masses(state);
    ledger_csv.write_row({fmt(std::int64_t{0}), fmt(m[0]), fmt(m[1]), fmt(m[2]),
                          fmt(std::int64_t{0}), fmt(std::int64_t{0}), fmt(std::int64_t{0})});

    double t = 0.0;
    std::int64_t step = 0;
    while (t < cfg.t_final) {
        const double alpha = max_signal_speed(state, cfg.gamma);
        double dt = cfg.cfl * grid.dx() / alpha;
        if (t + dt > cfg.t_final) dt = cfg.t_final - t;

        EulerParams params{cfg.gamma, dt, grid.dx(), scales, Boundary::FixedExtrapolation};
        const auto mass_before = masses(state);
        const auto out_before = outflows();
        state = euler_step(state, params, ledgers);
        const auto mass_after = masses(state);
        const auto out_after = outflows();
        for (std::size_t c = 0; c < 3; ++c) {
            // Exact per-step ledger identity, component by component.
            if (mass_after[c] - mass_before[c] + (out_after[c] - out_before[c]) != 0) {
                throw std::runtime_error("shu-osher: ledger identity broken at step " +
                                         std::to_string(step + 1) + " component " +
                                         std::to_string(c));
            }
        }
        t += dt;
        ++step;
        ledger_csv.write_row({fmt(step), fmt(mass_after[0]), fmt(mass_after[1]),
                              fmt(mass_after[2]), fmt(out_after[0]), fmt(out_after[1]),
                              fmt(out_after[2])});
    }

    CsvWriter csv(csv_path(cfg), {"x", "rho", "mom", "ene", "p"});
    for (std::size_t i = 0; i < cfg.n_cells; ++i) {
        const double rho = scales[0].delta * static_cast<double>(state.rho_q[i]);
        const double mom = scales[1].delta * static_cast<double>(state.mom_q[i]);
        const double ene = scales[2].delta * static_cast<double>(state.ene_q[i]);
        csv.write_row({fmt(grid.x(i)), fmt(rho), fmt(mom), fmt(ene),
                       fmt(pressure(rho, mom, ene, cfg.gamma))});
    }
}

void run_audit(const ExperimentConfig& cfg) {
    const double L = 1.0;
    const Grid1D grid(cfg.n_cells, 0.0, L);
    const FluxModel model = model_from_config(cfg);

    SeededUniform rng(cfg.seed);
    RealField u0(cfg.n_cells);
    for (auto& v : u0) v = rng(-1.0, 1.0);

    const double speed = std::max(model.max_wave_speed(-1.0, 1.0), 1e-300);
    const double dt = cfg.cfl * grid.dx() / speed;
    StepParams p{dt, grid.dx(), QuantScale{cfg.delta}, model, Boundary::Periodic};

    IntegerField q = quantize(u0, p.scale);
    RealField u_up = u0;
    TransferLedger ledger;

    CsvWriter csv(csv_path(cfg),
                  {"step", "integer_mass", "float_mass_fqnm", "float_mass_upwind"});
    const auto float_sum = [](const RealField& u) {
        double s = 0.0;
        for (double v : u) s += v;
        return s;
    };
    const auto emit = [&](std::int64_t step) {
        const std::int64_t im = total_mass(q);
        csv.write_row({fmt(step), fmt(im), fmt(cfg.delta * static_cast<double>(im)),
                       fmt(float_sum(u_up))});
    };

    emit(0);
    for (std::int64_t s = 1; s <= cfg.n_steps; ++s) {
        q = conservative_step(q, p, ledger);
        u_up = upwind_step(u_up, p);
        emit(s);
    }
}

void run_monotone_check(const ExperimentConfig& cfg) {
    const FluxModel model = model_from_config(cfg);
    const MonotoneReport rep =
        verify_monotone_stencil(model, cfg.lambda, cfg.delta, cfg.q_range);
    CsvWriter csv(csv_path(cfg),
                  {"model", "lambda", "delta", "Q", "pass", "counterexample"});
    csv.write_row({cfg.model, fmt(cfg.lambda), fmt(cfg.delta), fmt(cfg.q_range),
                   rep.pass ? "1" : "0", rep.counterexample});
}

void run_convergence(const ExperimentConfig& cfg) {
    const double L = 1.0;
    const Grid1D grid(cfg.n_cells, 0.0, L);
    const SineIC ic{L};

    RealField u0(cfg.n_cells), reference(cfg.n_cells);
    for (std::size_t i = 0; i < cfg.n_cells; ++i) {
        u0[i] = ic(grid.x(i));
        reference[i] = hopf_lax(grid.x(i), cfg.t_final, ic);
    }

    CsvWriter csv(csv_path(cfg), {"delta", "n_cells", "l1_vs_hopflax"});
    for (double delta : cfg.deltas) {
        const RealField u = advance_to_time(Scheme::Fqnm, u0, burgers_model(), grid,
                                            cfg.cfl, delta, cfg.t_final);
        const ErrorReport rep = error_norms(u, reference, grid.dx());
        csv.write_row({fmt(delta), fmt(static_cast<std::int64_t>(cfg.n_cells)),
                       fmt(rep.l1)});
    }
}

}  // namespace

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    RawMap raw = tokenize(text, origin);

    ExperimentConfig cfg;
    auto it = raw.find("experiment");
    if (it == raw.end()) throw ConfigError(origin + ": missing key: experiment");
    cfg.experiment = it->second.value;
    it->second.consumed = true;
    cfg.resolved.emplace_back("experiment", cfg.experiment);

    ConfigReader r(std::move(raw), origin, &cfg);
    cfg.out_dir = r.get_string("out_dir", ".");
    cfg.seed = r.get_seed("seed", 0);

    const std::string& exp = cfg.experiment;
    if (exp == "advect-sweep") {
        cfg.n_cells = static_cast<std::size_t>(r.get_positive_int("n_cells", 256));
        cfg.delta = r.get_positive_real("delta", 1e-3);
        cfg.cfl = r.get_positive_real("cfl", 0.9);
        cfg.schemes = r.get_scheme_list("scheme", "fqnm,upwind1,weno5");
    } else if (exp == "burgers-shock" || exp == "shock-zoom") {
        cfg.n_cells = static_cast<std::size_t>(r.get_positive_int("n_cells", 640));
        cfg.delta = r.get_positive_real("delta", 1e-3);
        cfg.cfl = r.get_positive_real("cfl", 0.9);
        cfg.t_final = r.get_positive_real("t_final", 0.25);
        if (exp == "shock-zoom") cfg.window = r.get_positive_real("window", 0.05);
    } else if (exp == "shu-osher") {
        cfg.n_cells = static_cast<std::size_t>(r.get_positive_int("n_cells", 1600));
        cfg.delta = r.get_positive_real("delta", 1e-4);
        cfg.cfl = r.get_positive_real("cfl", 0.9);
        cfg.t_final = r.get_positive_real("t_final", 1.8);
        cfg.gamma = r.get_positive_real("gamma", 1.4);
        if (!(cfg.gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    } else if (exp == "audit") {
        cfg.model = r.get_string("model", "burgers");
        cfg.advection_speed = r.get_positive_real("advection_speed", 1.0);
        cfg.n_cells = static_cast<std::size_t>(r.get_positive_int("n_cells", 512));
        cfg.delta = r.get_positive_real("delta", 1e-3);
        cfg.cfl = r.get_positive_real("cfl", 0.9);
        cfg.n_steps = r.get_positive_int("n_steps", 100000);
    } else if (exp == "monotone-check") {
        cfg.model = r.get_string("model", "burgers");
        cfg.advection_speed = r.get_positive_real("advection_speed", 1.0);
        cfg.lambda = r.get_positive_real("lambda", cfg.model == "advection" ? 0.9 : 0.4);
        cfg.delta = r.get_positive_real("delta", 0.02);
        cfg.q_range = r.get_positive_int("q_range", 50);
    } else if (exp == "convergence") {
        cfg.n_cells = static_cast<std::size_t>(r.get_positive_int("n_cells", 2048));
        cfg.cfl = r.get_positive_real("cfl", 0.9);
        cfg.t_final = r.get_positive_real("t_final", 0.25);
        cfg.deltas = r.get_positive_real_list("deltas", "0.01,0.001,0.0001");
    } else {
        throw ConfigError("unknown experiment '" + exp + "'");
    }
    r.reject_unknown();

    if (cfg.n_cells > 0 && cfg.n_cells < 2) throw ConfigError("n_cells must be >= 2");
    return cfg;
}

std::string experiment_catalog() {
    return
        "advect-sweep    keys: n_cells delta cfl scheme seed out_dir\n"
        "burgers-shock   keys: n_cells delta cfl t_final seed out_dir\n"
        "shock-zoom      keys: n_cells delta cfl t_final window seed out_dir\n"
        "shu-osher       keys: n_cells delta cfl t_final gamma seed out_dir\n"
        "audit           keys: model advection_speed n_cells delta cfl n_steps seed out_dir\n"
        "monotone-check  keys: model advection_speed lambda delta q_range seed out_dir\n"
        "convergence     keys: n_cells cfl t_final deltas seed out_dir\n"
        "\n"
        "Config format: one 'key = value' per line, '#' starts a comment.\n"
        "'experiment' is required; every other key has a documented default.\n";
}

void run_experiment(const ExperimentConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    write_manifest(cfg);

    if (cfg.experiment == "advect-sweep") {
        run_advect_sweep(cfg);
    } else if (cfg.experiment == "burgers-shock") {
        run_burgers_shock(cfg, /*zoom=*/false);
    } else if (cfg.experiment == "shock-zoom") {
        run_burgers_shock(cfg, /*zoom=*/true);
    } else if (cfg.experiment == "shu-osher") {
        run_shu_osher(cfg);
    } else if (cfg.experiment == "audit") {
        run_audit(cfg);
    } else if (cfg.experiment == "monotone-check") {
        run_monotone_check(cfg);
    } else if (cfg.experiment == "convergence") {
        run_convergence(cfg);
    } else {
        throw ConfigError("unknown experiment '" + cfg.experiment + "'");
    }
}

}  // namespace fqnm
