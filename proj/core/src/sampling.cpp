#include "emtoro/sampling.hpp"

#include <cmath>

#include "emtoro/operators.hpp"

namespace emtoro {

ScalarField random_scalar(const GridPtr& grid, int kmax, Rng& rng) {
  const auto& g = *grid;
  const int n = g.n();
  if (kmax >= n / 2) throw Error("random_scalar: kmax must stay below n/2");
  std::normal_distribution<double> gauss(0.0, 1.0);

  ScalarField f(grid);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (std::abs(g.freq(i)) > kmax || std::abs(g.freq(j)) > kmax ||
            std::abs(g.freq(l)) > kmax) {
          continue;
        }
        const int mi = (n - i) % n, mj = (n - j) % n, ml = (n - l) % n;
        const bool self = (mi == i && mj == j && ml == l);
        // Process each conjugate pair once, in storage order.
        if (std::tie(mi, mj, ml) < std::tie(i, j, l)) continue;
        const double re = gauss(rng);
        if (self) {
          f.at(i, j, l) = Complex{re, 0.0};
        } else {
          const double im = gauss(rng);
          f.at(i, j, l) = Complex{re, im};
          f.at(mi, mj, ml) = Complex{re, -im};
        }
      }
    }
  }
  return f;
}

VectorField3 random_vector(const GridPtr& grid, int kmax, Rng& rng) {
  VectorField3 v(grid);
  for (int i = 0; i < 3; ++i) v[i] = random_scalar(grid, kmax, rng);
  return v;
}

VectorField3 random_divfree(const GridPtr& grid, int kmax, Rng& rng) {
  return leray_project(random_vector(grid, kmax, rng));
}

State14 random_state(const GridPtr& grid, int kmax, Rng& rng, Basis basis) {
  State14 s(grid, basis);
  s.rho_e = random_scalar(grid, kmax, rng);
  s.rho_i = random_scalar(grid, kmax, rng);
  s.u_e = random_vector(grid, kmax, rng);
  s.u_i = random_vector(grid, kmax, rng);
  s.E = random_vector(grid, kmax, rng);
  s.B = random_vector(grid, kmax, rng);
  return s;
}

void normalize_h1_pair(VectorField3& a, VectorField3& b) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto& g = *a.grid();
    const int n = g.n();
    for (int ii = 0; ii < n; ++ii) {
      for (int jj = 0; jj < n; ++jj) {
        for (int ll = 0; ll < n; ++ll) {
          const double k2 =
              static_cast<double>(g.freq(ii) * g.freq(ii) +
                                  g.freq(jj) * g.freq(jj) +
                                  g.freq(ll) * g.freq(ll));
          const std::size_t m = g.index(ii, jj, ll);
          acc += (1.0 + k2) * (std::norm(a[i].coeffs()[m]) +
                               std::norm(b[i].coeffs()[m]));
        }
      }
    }
  }
  const double two_pi_cubed = 248.05021344239853;  // (2 pi)^3
  const double norm = std::sqrt(two_pi_cubed * acc);
  if (norm == 0.0) return;
  a *= 1.0 / norm;
  b *= 1.0 / norm;
}

}  // namespace emtoro
