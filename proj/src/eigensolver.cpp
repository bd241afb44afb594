#include "cornerspec/eigensolver.hpp"

#include <Eigen/Eigenvalues>

namespace cornerspec {

LaplacianSpectrum spectrum(const Eigen::MatrixXd& mat, double tol) {
  if (mat.rows() != mat.cols()) throw DomainError("spectrum of a non-square matrix");
  if (mat.rows() > kDenseEigenLimit) {
    throw ResourceError("dense eigensolve of size " + std::to_string(mat.rows()) + " exceeds " +
                        std::to_string(kDenseEigenLimit));
  }
  const double asym = (mat - mat.transpose()).cwiseAbs().maxCoeff();
  if (mat.size() && asym > 1e-12 * std::max(1.0, mat.cwiseAbs().maxCoeff())) {
    throw DomainError("matrix is not symmetric");
  }

  LaplacianSpectrum out;
  if (mat.rows() == 0) return out;
  Eigen::VectorXd ev;
  if (mat.rows() <= kJacobiLimit) {
    ev = jacobi_eigenvalues(mat, tol);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric QR iteration did not converge");
    ev = solver.eigenvalues();
  }
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.kernel_tolerance = 1e-7 * (out.eigenvalues.back() + 1.0);
  out.kernel_dim = static_cast<int>(std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(),
                                                  [&](double v) { return v < out.kernel_tolerance; }));
  return out;
}

std::vector<int> multiplicity_groups(const std::vector<double>& values, double rel_tol) {
  std::vector<int> groups(values.size());
  int g = -1;
  double start = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || std::abs(values[i] - start) > rel_tol * (1.0 + std::abs(start))) {
      ++g;
      start = values[i];
    }
    groups[i] = g;
  }
  return groups;
}

}  // namespace cornerspec
