#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "cornerspec/errors.hpp"

namespace cornerspec {

// Cyclic Jacobi: sweeps of plane rotations over every (p, q) pair until the
// off-diagonal Frobenius norm drops below tol * ||A||_F. Eigenvalues only,
// ascending.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& input, typename Derived::Scalar tol, int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (input.rows() != input.cols()) throw DomainError("eigenvalues of a non-square matrix");

  Matrix a = input;
  const Eigen::Index n = a.rows();
  const Scalar scale = std::max(a.norm(), Scalar(1e-300));
  auto off_norm = [&] {
    Scalar s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0;; ++sweep) {
    if (off_norm() <= tol * scale) break;
    if (sweep == max_sweeps) {
      throw NumericalError("Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> ev = a.diagonal();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

struct LaplacianSpectrum {
  int degree = 0;
  std::vector<double> eigenvalues;  // ascending, with multiplicity
  int kernel_dim = 0;
  double kernel_tolerance = 0.0;
};

// Matrices up to this size go through jacobi_eigenvalues; larger ones through
// Householder tridiagonalization + implicit QR.
inline constexpr int kJacobiLimit = 400;
inline constexpr int kDenseEigenLimit = 4000;

// All eigenvalues of a symmetric matrix (symmetric within 1e-12 relative).
// kernel_dim counts eigenvalues below 1e-7 * (max eigenvalue + 1).
LaplacianSpectrum spectrum(const Eigen::MatrixXd& mat, double tol = 1e-12);

// Group index per eigenvalue: consecutive values within rel_tol * (1 + |v|)
// of the group's first value share a group.
std::vector<int> multiplicity_groups(const std::vector<double>& sorted_values, double rel_tol = 1e-6);

}  // namespace cornerspec
