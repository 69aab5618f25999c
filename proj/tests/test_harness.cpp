#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "emtoro/config.hpp"
#include "emtoro/runner.hpp"
#include "emtoro/sampling.hpp"
#include "emtoro/snapshot.hpp"
#include "emtoro/verify.hpp"
#include "test_util.hpp"

using namespace emtoro;
using emtoro::testing::generic_params;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("emtoro_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static inline int counter = 0;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config loading") {
  SUBCASE("minimal file gets documented defaults") {
    const RunConfig cfg =
        parse_config(R"({"grid": 16, "model": "xmhd", "T": 0.1})");
    CHECK(cfg.grid.n == 16);
    CHECK(cfg.grid.dealias_fraction == doctest::Approx(2.0 / 3.0));
    CHECK(cfg.model == Model::xmhd);
    CHECK(cfg.T == 0.1);
    CHECK(cfg.epsilon_ladder == std::vector<double>{0.1});
    CHECK(cfg.sobolev_sigma == 1.0);
    CHECK(cfg.initial_data == InitialData::prepared_random);
  }

  SUBCASE("odd grid rejected") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"grid": 15})"),
                         doctest::Contains("even"), ConfigError);
  }

  SUBCASE("unknown keys rejected") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"gird": 16})"),
                         doctest::Contains("unknown key"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"plasma": {"mass": 1}})"),
                         doctest::Contains("plasma.mass"), ConfigError);
  }

  SUBCASE("parse errors carry position information") {
    CHECK_THROWS_WITH_AS(parse_config("{\n\"grid\": 16,,\n}"),
                         doctest::Contains("parse error"), ConfigError);
  }

  SUBCASE("epsilon ladder forms a run plan") {
    const RunConfig cfg =
        parse_config(R"({"epsilon_ladder": [0.1, 0.05, 0.025]})");
    CHECK(cfg.epsilon_ladder.size() == 3);
    CHECK_THROWS_AS(
        parse_config(R"({"epsilon": 0.1, "epsilon_ladder": [0.1]})"),
        ConfigError);
  }

  SUBCASE("validation lists every violation at once") {
    try {
      parse_config(R"({"grid": 15, "T": -1, "epsilon": 7})");
      CHECK(false);
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("grid.n") != std::string::npos);
      CHECK(msg.find("T must be") != std::string::npos);
      CHECK(msg.find("epsilon entries") != std::string::npos);
    }
  }

  SUBCASE("overrides reach nested keys") {
    RunConfig cfg = parse_config(R"({"grid": 16})");
    cfg = apply_overrides(cfg, {"grid.n=32", "model=eslm", "epsilon=0.05",
                                "plasma.m_e=0.5"});
    CHECK(cfg.grid.n == 32);
    CHECK(cfg.model == Model::eslm);
    CHECK(cfg.epsilon_ladder == std::vector<double>{0.05});
    CHECK(cfg.plasma.m_e == 0.5);
    CHECK_THROWS_AS(apply_overrides(cfg, {"nonsense"}), ConfigError);
  }

  SUBCASE("hash is stable and order independent") {
    const RunConfig a = parse_config(R"({"T": 0.2, "grid": 16})");
    const RunConfig b = parse_config(R"({"grid": 16, "T": 0.2})");
    CHECK(a.hash() == b.hash());
    const RunConfig c = parse_config(R"({"grid": 16, "T": 0.3})");
    CHECK(a.hash() != c.hash());
  }
}

TEST_CASE("snapshot format") {
  GridSpec gs;
  gs.n = 8;
  const GridPtr g = Grid::make(gs);
  Rng rng(3);
  State14 s = random_state(g, 2, rng);
  TempDir tmp;
  const fs::path f1 = tmp.path / "a.snap";
  const fs::path f2 = tmp.path / "b.snap";

  SUBCASE("write, read, rewrite is bit-identical") {
    save_snapshot(s, f1.string(), "deadbeef", 0.25);
    const Snapshot snap = load_snapshot(f1.string());
    CHECK(snap.params_hash == "deadbeef");
    CHECK(snap.time == 0.25);
    snap.write(f2.string());
    CHECK(slurp(f1) == slurp(f2));
  }

  SUBCASE("reconstructed state matches to roundoff") {
    save_snapshot(s, f1.string(), "h", 0.0);
    const State14 back = load_snapshot(f1.string()).to_state(g);
    CHECK(l2_norm(back - s) < 1e-13 * l2_norm(s));
    CHECK(back.basis == s.basis);
  }

  SUBCASE("grid mismatch is an explicit error") {
    save_snapshot(s, f1.string(), "h", 0.0);
    GridSpec gs2;
    gs2.n = 16;
    const GridPtr g2 = Grid::make(gs2);
    CHECK_THROWS_WITH_AS(load_snapshot(f1.string()).to_state(g2),
                         doctest::Contains("does not match"), IoError);
  }

  SUBCASE("corruption is caught by the checksum") {
    save_snapshot(s, f1.string(), "h", 0.0);
    std::string bytes = slurp(f1);
    bytes[bytes.size() - 5] ^= 0x40;
    std::ofstream(f1, std::ios::binary) << bytes;
    CHECK_THROWS_WITH_AS(load_snapshot(f1.string()),
                         doctest::Contains("checksum"), IoError);
  }

  SUBCASE("truncation is caught") {
    save_snapshot(s, f1.string(), "h", 0.0);
    std::string bytes = slurp(f1);
    bytes.resize(bytes.size() - 100);
    std::ofstream(f1, std::ios::binary) << bytes;
    CHECK_THROWS_WITH_AS(load_snapshot(f1.string()),
                         doctest::Contains("truncated"), IoError);
  }

  SUBCASE("version mismatch is rejected") {
    save_snapshot(s, f1.string(), "h", 0.0);
    std::string bytes = slurp(f1);
    const auto pos = bytes.find("\"version\":1");
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, 11, "\"version\":9");
    std::ofstream(f1, std::ios::binary) << bytes;
    CHECK_THROWS_WITH_AS(load_snapshot(f1.string()),
                         doctest::Contains("version"), IoError);
  }
}

TEST_CASE("diagnostics schema and determinism") {
  RunConfig cfg;
  cfg.grid.n = 8;
  cfg.plasma = generic_params();
  cfg.model = Model::eslm;
  cfg.T = 0.05;
  cfg.amplitude = 0.1;
  cfg.band_kmax = 2;
  cfg.seed = 4;
  const RunContext ctx(cfg);

  const Trajectory a = run_eslm(ctx);
  const std::string csv = diagnostics_csv(a);
  CHECK(csv.rfind("t,l2_norm,hsigma_norm,div_B,gauss_charge,energy,"
                  "gol_residual\n",
                  0) == 0);
  const Trajectory b = run_eslm(ctx);
  CHECK(diagnostics_csv(b) == csv);
}

TEST_CASE("run executor writes reports with the config hash") {
  TempDir tmp;
  RunConfig cfg;
  cfg.grid.n = 8;
  cfg.plasma = generic_params();
  cfg.model = Model::eslm;
  cfg.T = 0.02;
  cfg.amplitude = 0.05;
  cfg.band_kmax = 2;
  cfg.output_dir = (tmp.path / "runout").string();
  cfg.write_snapshots = true;

  std::ostringstream log;
  CHECK(execute_run(cfg, log) == 0);
  const std::string report = slurp(fs::path(cfg.output_dir) / "run_report.json");
  CHECK(report.find(cfg.hash()) != std::string::npos);
  CHECK(fs::exists(fs::path(cfg.output_dir) / "eslm" / "diagnostics.csv"));
  CHECK(fs::exists(fs::path(cfg.output_dir) / "eslm" / "snap_000000.snap"));

  std::ostringstream diag_log;
  CHECK(execute_diag((fs::path(cfg.output_dir) / "eslm").string(),
                     diag_log) == 0);
  CHECK(diag_log.str().find("max div_B") != std::string::npos);
}

TEST_CASE("prepare and bridge executors round trip through files") {
  TempDir tmp;
  RunConfig cfg;
  cfg.grid.n = 8;
  cfg.plasma = generic_params();
  cfg.band_kmax = 2;
  cfg.density_offset = 0.05;
  const RunContext ctx(cfg);

  // raw velocities in the original basis
  Rng rng(5);
  State14 raw(ctx.grid, Basis::original);
  raw.u_e = random_vector(ctx.grid, 2, rng);
  raw.u_i = random_vector(ctx.grid, 2, rng);
  const fs::path raw_path = tmp.path / "raw.snap";
  save_snapshot(raw, raw_path.string(), cfg.hash(), 0.0);

  const fs::path prep_path = tmp.path / "prep.snap";
  std::ostringstream log;
  CHECK(execute_prepare(cfg, raw_path.string(), prep_path.string(), log) == 0);
  const State14 prepared =
      load_snapshot(prep_path.string()).to_state(ctx.grid);
  CHECK(ctx.ws->pe_defect(prepared) < 1e-10);

  const fs::path x_path = tmp.path / "x.snap";
  const fs::path back_path = tmp.path / "back.snap";
  CHECK(execute_bridge(cfg, "slm2xmhd", prep_path.string(), x_path.string(),
                       log) == 0);
  CHECK(execute_bridge(cfg, "xmhd2slm", x_path.string(), back_path.string(),
                       log) == 0);
  const State14 back = load_snapshot(back_path.string()).to_state(ctx.grid);
  CHECK(l2_norm(back - prepared) < 1e-10 * l2_norm(prepared));

  CHECK_THROWS_AS(
      execute_bridge(cfg, "sideways", x_path.string(), back_path.string(), log),
      ConfigError);
}

TEST_CASE("verification suite") {
  VerifyOptions opt;
  opt.params = generic_params();
  opt.kmax = 3;
  opt.draws = 2;
  opt.field_grid_n = 8;
  opt.field_states = 3;

  SUBCASE("default parameters pass every check") {
    const VerifyReport rep = verify_suite(opt);
    CHECK(rep.all_pass);
    for (const auto& c : rep.checks) {
      INFO(c.name, " worst ", c.worst);
      CHECK(c.pass);
    }
    CHECK(!rep.mode_residuals.empty());
    const std::string json = verify_report_json(rep);
    CHECK(json.find("svd_oracle_distance") != std::string::npos);
  }

  SUBCASE("equal masses pass as well") {
    VerifyOptions eq = opt;
    eq.params.m_e = eq.params.m_i;
    CHECK(verify_suite(eq).all_pass);
  }

  SUBCASE("kmax floor") {
    VerifyOptions bad = opt;
    bad.kmax = 1;
    CHECK_THROWS_AS(verify_suite(bad), Error);
  }

  SUBCASE("fault injection: corrupted basis fails annihilation only") {
    const PlasmaParams p = generic_params();
    const ModeMatrices mm = build_mode_matrices(Vec3i(2, 1, -1), p);
    ModeBasis mb = kernel_bases(mm, p);
    // flip the sign of the magnetic block of the third constrained vector
    for (int c = 11; c < 14; ++c) mb.h_basis(c, 2) = -mb.h_basis(c, 2);
    CHECK(orthonormality_defect(mb.h_basis) < 1e-12);
    CHECK(annihilation_defect(mm, mb.h_basis, true) > 1e-3);
  }

  SUBCASE("executor maps failure to exit code 2") {
    std::ostringstream log;
    CHECK(execute_verify(opt, "", log) == 0);
    CHECK(log.str().find("PASS") != std::string::npos);
  }
}
