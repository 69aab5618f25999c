#pragma once

#include <stdexcept>
#include <string>

namespace emtoro {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Density dropped at or below the guard level n_ref * 1e-6.
struct VacuumError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace emtoro
