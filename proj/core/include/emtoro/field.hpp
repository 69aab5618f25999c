#pragma once

#include <array>
#include <vector>

#include "emtoro/grid.hpp"

namespace emtoro {

/// Real-valued periodic scalar field stored by its spectral coefficients on
/// the full wavenumber lattice (Hermitian symmetry c(-k) = conj c(k)).
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(GridPtr grid);
  ScalarField(GridPtr grid, std::vector<Complex> coeffs);

  static ScalarField from_physical(const GridPtr& grid,
                                   const std::vector<double>& samples);
  std::vector<double> to_physical() const;

  const GridPtr& grid() const { return grid_; }
  const std::vector<Complex>& coeffs() const { return c_; }
  std::vector<Complex>& coeffs() { return c_; }
  std::size_t size() const { return c_.size(); }

  Complex& at(int i, int j, int l) { return c_[grid_->index(i, j, l)]; }
  const Complex& at(int i, int j, int l) const {
    return c_[grid_->index(i, j, l)];
  }
  Complex mean() const { return c_.empty() ? Complex{} : c_[0]; }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);

  friend ScalarField operator+(ScalarField a, const ScalarField& b) {
    return a += b;
  }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) {
    return a -= b;
  }
  friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

 private:
  GridPtr grid_;
  std::vector<Complex> c_;
};

struct VectorField3 {
  std::array<ScalarField, 3> comp;

  VectorField3() = default;
  explicit VectorField3(const GridPtr& grid)
      : comp{ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

  ScalarField& operator[](int i) { return comp[static_cast<std::size_t>(i)]; }
  const ScalarField& operator[](int i) const {
    return comp[static_cast<std::size_t>(i)];
  }
  const GridPtr& grid() const { return comp[0].grid(); }

  VectorField3& operator+=(const VectorField3& o);
  VectorField3& operator-=(const VectorField3& o);
  VectorField3& operator*=(double s);
  friend VectorField3 operator+(VectorField3 a, const VectorField3& b) {
    return a += b;
  }
  friend VectorField3 operator-(VectorField3 a, const VectorField3& b) {
    return a -= b;
  }
  friend VectorField3 operator*(double s, VectorField3 a) { return a *= s; }
};

void check_same_grid(const ScalarField& a, const ScalarField& b);

/// L2(T^3) norm via Parseval: ||f||^2 = (2*pi)^3 sum |c_k|^2.
double l2_norm(const ScalarField& f);
double l2_norm(const VectorField3& v);
/// L2 inner product <f, g> = (2*pi)^3 Re sum c_f conj(c_g).
double l2_inner(const ScalarField& a, const ScalarField& b);

/// Discrete physical-space L2 norm (trapezoid = rectangle rule on the torus),
/// equals l2_norm up to roundoff; used by the Parseval check.
double l2_norm_physical(const ScalarField& f);

/// max_k |c(k) - conj(c(-k))|, zero for exactly real-valued fields.
double hermitian_defect(const ScalarField& f);

}  // namespace emtoro
