#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emtoro/grid.hpp"
#include "emtoro/plasma.hpp"

namespace emtoro {

enum class Model { emtf, eslm, xmhd, paired };
enum class InitialData { prepared_random, irrotational, single_mode, from_file };

std::string to_string(Model m);
std::string to_string(InitialData d);

/// One experiment description. Defaults are applied by the loader; unknown
/// keys are rejected and validation reports every violation at once.
struct RunConfig {
  GridSpec grid;
  PlasmaParams plasma;
  Model model = Model::emtf;
  std::vector<double> epsilon_ladder{0.1};  // single value = one-run ladder
  double T = 0.1;
  double dt = 0.0;   // 0: use the documented step rules
  double cfl = 0.5;  // advective safety factor when dt = 0
  double snapshot_dt = 0.0;  // 0: T/20
  double sobolev_sigma = 1.0;
  std::uint64_t seed = 1;
  InitialData initial_data = InitialData::prepared_random;
  std::string init_file;
  double amplitude = 0.1;  // velocity scale of the random recipes
  int band_kmax = 4;       // |k|_inf cap of the random recipes
  double density_offset = 0.05;
  std::string output_dir = "out";
  bool write_snapshots = false;

  void validate() const;  // throws ConfigError listing all violations
  /// Canonical JSON rendering (sorted keys) used for hashing and reports.
  std::string canonical_json() const;
  /// FNV-1a hash of the canonical rendering, as fixed-width hex.
  std::string hash() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

/// Applies a single "dotted.key=value" override on top of a config.
RunConfig apply_overrides(const RunConfig& cfg,
                          const std::vector<std::string>& overrides);

/// FNV-1a 64-bit, used for config hashes and snapshot checksums.
std::uint64_t fnv1a(const void* data, std::size_t size,
                    std::uint64_t seed = 14695981039346656037ull);

/// The output root: $EMTORO_OUTPUT_ROOT if set, else the current directory.
std::string output_root();

}  // namespace emtoro
