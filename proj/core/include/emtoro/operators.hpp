#pragma once

#include "emtoro/field.hpp"

namespace emtoro {

// Constant-coefficient Fourier multipliers. Mode-wise actions:
//   grad      -> i k
//   div       -> i k .
//   curl      -> i k x
//   laplacian -> -|k|^2
// with the per-axis Nyquist frequency treated as zero (see Grid).

VectorField3 grad(const ScalarField& f);
ScalarField div(const VectorField3& v);
VectorField3 curl(const VectorField3& v);
ScalarField laplacian(const ScalarField& f);
VectorField3 laplacian(const VectorField3& v);

/// Inverse Laplacian with the zero-mean convention: multiplier -1/|k|^2 for
/// k != 0, and 0 on the mean mode. Callers must pass zero-mean data when the
/// mean matters; the operator is only ever applied to curls here.
ScalarField inv_laplacian(const ScalarField& f);
VectorField3 inv_laplacian(const VectorField3& v);

/// Leray projection onto divergence-free fields: Id - khat (x) khat per mode,
/// identity on the mean mode.
VectorField3 leray_project(const VectorField3& v);

/// (Id - b*Laplacian)^{-1}: multiplier 1/(1 + b|k|^2), b > 0.
ScalarField helmholtz_inverse(const ScalarField& f, double b);
VectorField3 helmholtz_inverse(const VectorField3& v, double b);
/// b*Laplacian/(1 - b*Laplacian): multiplier -b|k|^2/(1 + b|k|^2), b > 0.
ScalarField helmholtz_ratio(const ScalarField& f, double b);
VectorField3 helmholtz_ratio(const VectorField3& v, double b);
/// (Id - b*Laplacian): multiplier (1 + b|k|^2), b > 0.
ScalarField helmholtz_apply(const ScalarField& f, double b);
VectorField3 helmholtz_apply(const VectorField3& v, double b);

/// Zero every coefficient with any |k_j| > dealias_fraction * n/2.
ScalarField dealias(const ScalarField& f);
VectorField3 dealias(const VectorField3& v);

/// Pointwise physical-space product, transformed back and dealiased.
ScalarField product(const ScalarField& a, const ScalarField& b);

// Physical-space staging for the quadratic terms of the RHS evaluators.
using PhysScalar = std::vector<double>;
struct PhysVector {
  PhysScalar x, y, z;
};

PhysScalar to_phys(const ScalarField& f);
PhysVector to_phys(const VectorField3& v);
ScalarField to_spec(const GridPtr& grid, const PhysScalar& s,
                    bool truncate = true);
VectorField3 to_spec(const GridPtr& grid, const PhysVector& v,
                     bool truncate = true);

PhysVector cross(const PhysVector& a, const PhysVector& b);
PhysScalar dot(const PhysVector& a, const PhysVector& b);
PhysScalar mul(const PhysScalar& a, const PhysScalar& b);
void axpy(double alpha, const PhysScalar& x, PhysScalar& y);
void axpy(double alpha, const PhysVector& x, PhysVector& y);
PhysVector scale(const PhysScalar& s, const PhysVector& v);

}  // namespace emtoro
