#include "emtoro/grid.hpp"

#include <fftw3.h>

#include <cmath>

namespace emtoro {

void GridSpec::validate() const {
  if (n < 8 || n % 2 != 0) {
    throw ConfigError("grid n must be even and >= 8, got " + std::to_string(n));
  }
  if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0) {
    throw ConfigError("dealias_fraction must lie in (0, 1]");
  }
}

int GridSpec::dealias_kmax() const {
  return static_cast<int>(std::floor(dealias_fraction * (n / 2) + 1e-12));
}

Grid::Grid(GridSpec spec) : spec_(spec) {
  spec_.validate();
  const auto n = static_cast<std::size_t>(spec_.n);
  size_ = n * n * n;
  dealias_kmax_ = spec_.dealias_kmax();

  std::vector<Complex> a(size_), b(size_);
  auto* ap = reinterpret_cast<fftw_complex*>(a.data());
  auto* bp = reinterpret_cast<fftw_complex*>(b.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plan_fwd_ = fftw_plan_dft_3d(spec_.n, spec_.n, spec_.n, ap, bp,
                               FFTW_FORWARD, flags);
  plan_bwd_ = fftw_plan_dft_3d(spec_.n, spec_.n, spec_.n, ap, bp,
                               FFTW_BACKWARD, flags);
  if (!plan_fwd_ || !plan_bwd_) throw Error("fftw plan creation failed");
}

Grid::~Grid() {
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

std::shared_ptr<const Grid> Grid::make(GridSpec spec) {
  return std::make_shared<const Grid>(spec);
}

void Grid::forward(const std::vector<double>& samples,
                   std::vector<Complex>& coeffs) const {
  if (samples.size() != size_) throw Error("forward: sample count mismatch");
  std::vector<Complex> in(size_);
  for (std::size_t i = 0; i < size_; ++i) in[i] = samples[i];
  coeffs.resize(size_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(coeffs.data()));
  const double scale = 1.0 / static_cast<double>(size_);
  for (auto& c : coeffs) c *= scale;
}

void Grid::inverse(const std::vector<Complex>& coeffs,
                   std::vector<double>& samples) const {
  if (coeffs.size() != size_) throw Error("inverse: coefficient count mismatch");
  std::vector<Complex> in = coeffs, out(size_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  samples.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) samples[i] = out[i].real();
}

void Grid::inverse_complex(const std::vector<Complex>& coeffs,
                           std::vector<Complex>& values) const {
  if (coeffs.size() != size_) throw Error("inverse: coefficient count mismatch");
  std::vector<Complex> in = coeffs;
  values.resize(size_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(values.data()));
}

}  // namespace emtoro
