// Command line front end: run / converge / verify / prepare / bridge / diag.
// Exit codes: 0 pass, 1 run failure, 2 verification failure, 3 config error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emtoro/config.hpp"
#include "emtoro/runner.hpp"
#include "emtoro/verify.hpp"

namespace {

emtoro::RunConfig load_with_overrides(const std::string& config_path,
                                      const std::vector<std::string>& overrides) {
  emtoro::RunConfig cfg = config_path.empty()
                              ? emtoro::RunConfig{}
                              : emtoro::load_config(config_path);
  if (!overrides.empty()) cfg = emtoro::apply_overrides(cfg, overrides);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral two-fluid plasma toolkit on the periodic box"};
  app.require_subcommand(1);

  std::string config_path, in_path, out_path, direction, traj_dir, report_path;
  std::vector<std::string> overrides;
  int kmax = 8;
  int draws = 5;

  auto* run = app.add_subcommand("run", "integrate one configured model");
  run->add_option("--config", config_path, "config file (JSON)")->required();
  run->add_option("--override", overrides, "key=value config overrides");

  auto* converge =
      app.add_subcommand("converge", "ladder study against the slow reference");
  converge->add_option("--config", config_path)->required();
  converge->add_option("--override", overrides);

  auto* verify = app.add_subcommand("verify", "projector and group test suite");
  verify->add_option("--config", config_path, "config supplying parameters");
  verify->add_option("--kmax", kmax, "lattice radius (default 8)");
  verify->add_option("--draws", draws, "parameter draws (default 5)");
  verify->add_option("--out", report_path, "JSON report path");

  auto* prepare = app.add_subcommand("prepare", "project raw data onto the "
                                                "polarized subspace");
  prepare->add_option("--config", config_path)->required();
  prepare->add_option("--in", in_path)->required();
  prepare->add_option("--out", out_path)->required();

  auto* bridge = app.add_subcommand("bridge", "map between representations");
  bridge->add_option("--config", config_path)->required();
  bridge->add_option("--dir", direction, "slm2xmhd or xmhd2slm")->required();
  bridge->add_option("--in", in_path)->required();
  bridge->add_option("--out", out_path)->required();

  auto* diag = app.add_subcommand("diag", "summarize a trajectory directory");
  diag->add_option("--traj", traj_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return emtoro::execute_run(load_with_overrides(config_path, overrides),
                                 std::cout);
    }
    if (converge->parsed()) {
      return emtoro::execute_converge(
          load_with_overrides(config_path, overrides), std::cout);
    }
    if (verify->parsed()) {
      emtoro::VerifyOptions opt;
      if (!config_path.empty()) {
        opt.params = emtoro::load_config(config_path).plasma;
      }
      opt.kmax = kmax;
      opt.draws = draws;
      return emtoro::execute_verify(opt, report_path, std::cout);
    }
    if (prepare->parsed()) {
      return emtoro::execute_prepare(load_with_overrides(config_path, {}),
                                     in_path, out_path, std::cout);
    }
    if (bridge->parsed()) {
      return emtoro::execute_bridge(load_with_overrides(config_path, {}),
                                    direction, in_path, out_path, std::cout);
    }
    if (diag->parsed()) {
      return emtoro::execute_diag(traj_dir, std::cout);
    }
  } catch (const emtoro::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const emtoro::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
