#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "harness.hpp"

using namespace fqnm;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("fqnm_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("parse_config: missing experiment key") {
    CHECK_THROWS_WITH_AS(parse_config_text(""), doctest::Contains("missing key: experiment"),
                         ConfigError);
}

TEST_CASE("parse_config: negative delta") {
    CHECK_THROWS_WITH_AS(
        parse_config_text("experiment = burgers-shock\ndelta = -1\n"),
        doctest::Contains("delta must be positive"), ConfigError);
}

TEST_CASE("parse_config: unknown and duplicate keys carry line numbers") {
    CHECK_THROWS_WITH_AS(
        parse_config_text("experiment = audit\nbogus = 3\n"),
        doctest::Contains(":2: unknown key: bogus"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config_text("experiment = audit\ndelta = 1\ndelta = 2\n"),
        doctest::Contains(":3: duplicate key: delta"), ConfigError);
}

TEST_CASE("parse_config: type mismatches name the line") {
    CHECK_THROWS_WITH_AS(
        parse_config_text("experiment = audit\nn_cells = twelve\n"),
        doctest::Contains(":2:"), ConfigError);
}

TEST_CASE("parse_config: comments, whitespace, and defaults") {
    const ExperimentConfig cfg = parse_config_text(
        "# advect sweep with defaults\n"
        "experiment = advect-sweep   # trailing comment\n");
    CHECK(cfg.experiment == "advect-sweep");
    CHECK(cfg.n_cells == 256);
    CHECK(cfg.delta == 1e-3);
    CHECK(cfg.cfl == 0.9);
    CHECK(cfg.schemes.size() == 3);
    // Resolved defaults are echoed for the manifest.
    bool saw_delta = false;
    for (const auto& [k, v] : cfg.resolved) saw_delta |= (k == "delta");
    CHECK(saw_delta);
}

TEST_CASE("parse_config: unknown experiment") {
    CHECK_THROWS_WITH_AS(parse_config_text("experiment = frobnicate\n"),
                         doctest::Contains("unknown experiment"), ConfigError);
}

TEST_CASE("run_experiment: monotone-check writes one CSV row plus manifest") {
    const fs::path dir = fresh_dir("monotone");
    ExperimentConfig cfg = parse_config_text(
        "experiment = monotone-check\n"
        "model = advection\n"
        "lambda = 0.9\n"
        "delta = 0.02\n"
        "q_range = 10\n");
    cfg.out_dir = dir.string();
    run_experiment(cfg);

    const std::string csv = slurp(dir / "monotone-check.csv");
    CHECK(csv.find("model,lambda,delta,Q,pass,counterexample") == 0);
    CHECK(csv.find("advection") != std::string::npos);
    CHECK(csv.find(",1,") != std::string::npos);  // pass column

    const std::string manifest = slurp(dir / "monotone-check.manifest.txt");
    CHECK(manifest.find("artifact_version") != std::string::npos);
    CHECK(manifest.find("lambda = ") != std::string::npos);
}

TEST_CASE("run_experiment: advect-sweep row count = frequencies x schemes") {
    const fs::path dir = fresh_dir("sweep");
    ExperimentConfig cfg = parse_config_text(
        "experiment = advect-sweep\n"
        "n_cells = 64\n"
        "scheme = fqnm,upwind1\n");
    cfg.out_dir = dir.string();
    run_experiment(cfg);

    const std::string csv = slurp(dir / "advect-sweep.csv");
    std::size_t rows = 0;
    for (char c : csv) rows += (c == '\n');
    CHECK(rows == 1 + 10 * 2);  // header + 10 frequencies x 2 schemes
}

TEST_CASE("run_experiment: audit mass column is a single repeated integer") {
    const fs::path dir = fresh_dir("audit");
    ExperimentConfig cfg = parse_config_text(
        "experiment = audit\n"
        "n_cells = 64\n"
        "n_steps = 200\n"
        "seed = 7\n");
    cfg.out_dir = dir.string();
    run_experiment(cfg);

    std::ifstream in(dir / "audit.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,integer_mass,float_mass_fqnm,float_mass_upwind");
    std::string mass;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        const std::string m = line.substr(a + 1, b - a - 1);
        if (rows == 0) mass = m;
        CHECK(m == mass);
        ++rows;
    }
    CHECK(rows == 201);
}

TEST_CASE("run_experiment: reruns are byte-identical") {
    const fs::path d1 = fresh_dir("det1");
    const fs::path d2 = fresh_dir("det2");
    const std::string text =
        "experiment = burgers-shock\n"
        "n_cells = 96\n"
        "t_final = 0.2\n";
    ExperimentConfig c1 = parse_config_text(text);
    ExperimentConfig c2 = parse_config_text(text);
    c1.out_dir = d1.string();
    c2.out_dir = d2.string();
    run_experiment(c1);
    run_experiment(c2);
    CHECK(slurp(d1 / "burgers-shock.csv") == slurp(d2 / "burgers-shock.csv"));
}

TEST_CASE("run_experiment: shock-zoom stays inside the window") {
    const fs::path dir = fresh_dir("zoom");
    ExperimentConfig cfg = parse_config_text(
        "experiment = shock-zoom\n"
        "n_cells = 128\n"
        "t_final = 0.2\n"
        "window = 0.05\n");
    cfg.out_dir = dir.string();
    run_experiment(cfg);

    std::ifstream in(dir / "shock-zoom.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,u_fqnm,u_upwind1,u_weno5,u_hopflax");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const double x = std::stod(line.substr(0, line.find(',')));
        CHECK(std::abs(x - 0.5) <= 0.05 + 1e-12);
        ++rows;
    }
    CHECK(rows > 0);
    CHECK(rows < 128);
}

TEST_CASE("experiment catalog names every experiment") {
    const std::string cat = experiment_catalog();
    for (const char* name : {"advect-sweep", "burgers-shock", "shock-zoom", "shu-osher",
                             "audit", "monotone-check", "convergence"}) {
        CHECK(cat.find(name) != std::string::npos);
    }
}
