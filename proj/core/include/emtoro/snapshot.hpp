#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emtoro/state.hpp"

namespace emtoro {

/// On-disk state container: a one-line magic, a JSON header, then one
/// little-endian float64 array per component in row-major physical-space
/// layout. The payload arrays are kept verbatim after a read, so an
/// unmodified snapshot rewrites bit-identically.
struct Snapshot {
  static constexpr int kSchemaVersion = 1;

  int version = kSchemaVersion;
  int n = 0;
  Basis basis = Basis::symmetrized;
  std::vector<std::string> components;
  std::string params_hash;
  double time = 0.0;
  std::uint64_t checksum = 0;
  std::vector<std::vector<double>> payload;  // 14 arrays of n^3 samples

  static Snapshot from_state(const State14& s, const std::string& params_hash,
                             double time);
  State14 to_state(const GridPtr& grid) const;

  void write(const std::string& path) const;
  static Snapshot read(const std::string& path);
};

void save_snapshot(const State14& s, const std::string& path,
                   const std::string& params_hash, double time);
Snapshot load_snapshot(const std::string& path);

}  // namespace emtoro
