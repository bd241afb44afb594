#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "cornerspec/errors.hpp"

namespace cornerspec {

// Truncated cylinder [0, L] x cross-section, Dirichlet at both ends, with
// -∂_t² discretized by second differences on grid_n interior points.
struct CylinderModel {
  Eigen::MatrixXd cross_section;  // symmetric, both form blocks of the face
  double length = 1.0;
  int grid_n = 16;
};

inline constexpr int kMinCylinderGrid = 16;

// Cross-section given by its eigenvalues (diagonal operator).
CylinderModel cylinder_from_spectrum(const std::vector<double>& eigenvalues, double length, int grid_n);

// Smallest eigenvalue of the symmetric tridiagonal matrix (diag, off) by
// Sturm-sequence bisection.
template <typename Scalar>
Scalar tridiagonal_min_eigenvalue(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag,
                                  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& off) {
  const Eigen::Index n = diag.size();
  if (n == 0) throw DomainError("empty tridiagonal matrix");
  // Gershgorin interval
  Scalar lo = diag[0], hi = diag[0];
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar r = 0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  // number of eigenvalues strictly below x
  auto count_below = [&](Scalar x) {
    int count = 0;
    Scalar d = 1;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Scalar b2 = i > 0 ? off[i - 1] * off[i - 1] : Scalar(0);
      d = diag[i] - x - (i > 0 ? b2 / d : Scalar(0));
      if (d == Scalar(0)) d = std::numeric_limits<Scalar>::epsilon() * (std::abs(x) + 1);
      if (d < 0) ++count;
    }
    return count;
  };
  for (int iter = 0; iter < 400 && hi - lo > 4 * std::numeric_limits<Scalar>::epsilon() * (std::abs(lo) + std::abs(hi)); ++iter) {
    const Scalar mid = (lo + hi) / 2;
    if (count_below(mid) >= 1) hi = mid;
    else lo = mid;
  }
  return (lo + hi) / 2;
}

// Smallest eigenvalue of the n x n Dirichlet second-difference matrix on
// [0, L] (mesh width L / (n + 1)).
double dirichlet_min(double length, int grid_n);

Eigen::MatrixXd dirichlet_matrix(double length, int grid_n);

// min over cross-section eigenvalues μ of μ + dirichlet_min(L, grid_n), using
// the tensor structure of the product operator.
double cylinder_ground_energy(const CylinderModel& m);

// Same quantity from a dense solve of I ⊗ C + T ⊗ I (size guard 4000).
double cylinder_ground_energy_dense(const CylinderModel& m);

}  // namespace cornerspec
