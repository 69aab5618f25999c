#pragma once

#include <vector>

#include "emtoro/modes.hpp"
#include "emtoro/state.hpp"

namespace emtoro {

/// Per-grid cache of mode eigendecompositions plus the field-level actions
/// of the filtering group and of the projectors. Immutable after
/// construction; all appliers are const and safe to call concurrently.
class ModeWorkspace {
 public:
  ModeWorkspace(GridPtr grid, PlasmaParams params);

  const GridPtr& grid() const { return grid_; }
  const PlasmaParams& params() const { return params_; }
  const DerivedConstants& consts() const { return consts_; }

  /// S(tau) = exp(tau L), unitary mode by mode.
  State14 apply_group(double tau, const State14& s) const;

  /// Orthogonal projector onto Ker L (mode-wise kernel bases).
  State14 apply_P(const State14& s) const;

  /// Effective projector onto Ker L ∩ Ker G via the global Fourier-multiplier
  /// formula (Leray + curl + Helmholtz factors).
  State14 apply_Pe(const State14& s) const;
  /// Same projector, applied mode by mode from the explicit bases; kept as an
  /// independent evaluation path.
  State14 apply_Pe_modewise(const State14& s) const;

  /// Reduced form valid on the invariant subspace; the input must already
  /// satisfy s = Pe s (checked, relative tolerance 1e-6).
  State14 apply_Pe_simplified(const State14& s) const;

  /// Exact mean over the fast time of S(tau) s, which is P s.
  State14 mean_value_exact(const State14& s) const { return apply_P(s); }
  /// Trapezoid mean (1/T) int_0^T S(tau) s dtau, for quadrature studies.
  State14 mean_value_quadrature(const State14& s, double t_avg,
                                int nodes) const;

  /// Relative distance of s from its Pe projection.
  double pe_defect(const State14& s) const;

  /// Frequencies of mode m (storage index), for quadrature error bounds.
  const Eigen::Matrix<double, 14, 1>& frequencies(std::size_t m) const {
    return cache_[m].w;
  }
  const Mat14& eigenvectors(std::size_t m) const { return cache_[m].v; }

  /// Largest |frequency| over modes inside the dealias band; the fastest
  /// oscillation rate the filtered dynamics can carry.
  double max_band_frequency() const { return max_band_freq_; }

 private:
  struct EigMode {
    Mat14 v;
    Eigen::Matrix<double, 14, 1> w;
  };

  GridPtr grid_;
  PlasmaParams params_;
  DerivedConstants consts_;
  std::vector<EigMode> cache_;
  double max_band_freq_ = 0.0;
};

}  // namespace emtoro
