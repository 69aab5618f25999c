#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "emtoro/errors.hpp"

namespace emtoro {

using Complex = std::complex<double>;

/// Cubic grid on the 2*pi-periodic torus, n collocation points per axis.
/// The wavenumber lattice is {-n/2+1, ..., n/2} on each axis.
struct GridSpec {
  int n = 16;
  double dealias_fraction = 2.0 / 3.0;

  void validate() const;
  /// Largest |k_j| kept by the dealias rule: |k_j| <= fraction * n/2.
  int dealias_kmax() const;
};

/// FFT plans and index helpers for one GridSpec. Immutable after
/// construction; fields hold a shared_ptr to their grid.
///
/// Derivative-type multipliers treat the unpaired Nyquist frequency
/// (k_j = n/2) as zero; dealiased dynamics never populates it.
class Grid {
 public:
  explicit Grid(GridSpec spec);
  ~Grid();
  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;

  static std::shared_ptr<const Grid> make(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  std::size_t size() const { return size_; }

  std::size_t index(int i, int j, int l) const {
    const auto n = static_cast<std::size_t>(spec_.n);
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(l);
  }

  /// FFT storage index -> signed lattice wavenumber.
  int freq(int idx) const { return idx <= spec_.n / 2 ? idx : idx - spec_.n; }
  /// Signed wavenumber with the Nyquist plane mapped to zero.
  int freq_deriv(int idx) const {
    const int k = freq(idx);
    return k == spec_.n / 2 ? 0 : k;
  }

  bool in_dealias_band(int i, int j, int l) const {
    const int m = dealias_kmax_;
    return std::abs(freq(i)) <= m && std::abs(freq(j)) <= m &&
           std::abs(freq(l)) <= m;
  }
  int dealias_kmax() const { return dealias_kmax_; }

  /// Physical samples (row-major, l fastest) -> spectral coefficients of
  /// f(x) = sum_k c_k exp(i k.x).
  void forward(const std::vector<double>& samples,
               std::vector<Complex>& coeffs) const;
  /// Spectral coefficients -> physical samples (real part; the imaginary
  /// residue of a Hermitian-symmetric field is at roundoff).
  void inverse(const std::vector<Complex>& coeffs,
               std::vector<double>& samples) const;
  /// Complex-valued inverse, used by symmetry diagnostics.
  void inverse_complex(const std::vector<Complex>& coeffs,
                       std::vector<Complex>& values) const;

 private:
  GridSpec spec_;
  std::size_t size_;
  int dealias_kmax_;
  void* plan_fwd_ = nullptr;  // fftw_plan
  void* plan_bwd_ = nullptr;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace emtoro
