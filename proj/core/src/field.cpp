#include "emtoro/field.hpp"

#include <cmath>
#include <numbers>

namespace emtoro {

namespace {
constexpr double kTwoPiCubed =
    8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;
}

ScalarField::ScalarField(GridPtr grid)
    : grid_(std::move(grid)), c_(grid_->size(), Complex{0.0, 0.0}) {}

ScalarField::ScalarField(GridPtr grid, std::vector<Complex> coeffs)
    : grid_(std::move(grid)), c_(std::move(coeffs)) {
  if (c_.size() != grid_->size()) throw Error("coefficient count mismatch");
}

ScalarField ScalarField::from_physical(const GridPtr& grid,
                                       const std::vector<double>& samples) {
  ScalarField f(grid);
  grid->forward(samples, f.c_);
  return f;
}

std::vector<double> ScalarField::to_physical() const {
  std::vector<double> samples;
  grid_->inverse(c_, samples);
  return samples;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  check_same_grid(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  check_same_grid(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}

VectorField3& VectorField3::operator+=(const VectorField3& o) {
  for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] += o[i];
  return *this;
}
VectorField3& VectorField3::operator-=(const VectorField3& o) {
  for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}
VectorField3& VectorField3::operator*=(double s) {
  for (auto& c : comp) c *= s;
  return *this;
}

void check_same_grid(const ScalarField& a, const ScalarField& b) {
  if (!a.grid() || !b.grid()) throw Error("field without a grid");
  if (a.grid().get() != b.grid().get() &&
      a.grid()->spec().n != b.grid()->spec().n) {
    throw Error("grid mismatch between fields");
  }
}

double l2_norm(const ScalarField& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) s += std::norm(c);
  return std::sqrt(kTwoPiCubed * s);
}

double l2_norm(const VectorField3& v) {
  double s = 0.0;
  for (const auto& c : v.comp) {
    const double ni = l2_norm(c);
    s += ni * ni;
  }
  return std::sqrt(s);
}

double l2_inner(const ScalarField& a, const ScalarField& b) {
  check_same_grid(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += (a.coeffs()[i] * std::conj(b.coeffs()[i])).real();
  }
  return kTwoPiCubed * s;
}

double l2_norm_physical(const ScalarField& f) {
  const auto samples = f.to_physical();
  const double n = static_cast<double>(f.grid()->n());
  const double cell = kTwoPiCubed / (n * n * n);
  double s = 0.0;
  for (double v : samples) s += v * v;
  return std::sqrt(cell * s);
}

double hermitian_defect(const ScalarField& f) {
  const auto& g = *f.grid();
  const int n = g.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const int mi = (n - i) % n;
    for (int j = 0; j < n; ++j) {
      const int mj = (n - j) % n;
      for (int l = 0; l < n; ++l) {
        const int ml = (n - l) % n;
        const Complex d = f.at(i, j, l) - std::conj(f.at(mi, mj, ml));
        worst = std::max(worst, std::abs(d));
      }
    }
  }
  return worst;
}

}  // namespace emtoro
