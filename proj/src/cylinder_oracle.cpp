#include "cornerspec/cylinder_oracle.hpp"

#include "cornerspec/eigensolver.hpp"

namespace cornerspec {

namespace {

void check_model(const CylinderModel& m) {
  if (!(m.length > 0.0)) throw DomainError("cylinder length must be positive");
  if (m.grid_n < kMinCylinderGrid) throw DomainError("cylinder grid needs at least 16 points");
  if (m.cross_section.rows() == 0 || m.cross_section.rows() != m.cross_section.cols()) {
    throw DomainError("cross-section operator must be a nonempty square matrix");
  }
}

}  // namespace

CylinderModel cylinder_from_spectrum(const std::vector<double>& eigenvalues, double length, int grid_n) {
  CylinderModel m;
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(eigenvalues.data(), eigenvalues.size());
  m.cross_section = d.asDiagonal();
  m.length = length;
  m.grid_n = grid_n;
  check_model(m);
  return m;
}

Eigen::MatrixXd dirichlet_matrix(double length, int grid_n) {
  const double h = length / (grid_n + 1);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(grid_n, grid_n);
  for (int i = 0; i < grid_n; ++i) {
    t(i, i) = 2.0 / (h * h);
    if (i + 1 < grid_n) t(i, i + 1) = t(i + 1, i) = -1.0 / (h * h);
  }
  return t;
}

double dirichlet_min(double length, int grid_n) {
  if (!(length > 0.0) || grid_n < 1) throw DomainError("bad Dirichlet interval");
  const double h = length / (grid_n + 1);
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(grid_n, 2.0 / (h * h));
  Eigen::VectorXd off = Eigen::VectorXd::Constant(std::max(grid_n - 1, 0), -1.0 / (h * h));
  return tridiagonal_min_eigenvalue(diag, off);
}

double cylinder_ground_energy(const CylinderModel& m) {
  check_model(m);
  const auto cross = spectrum(m.cross_section);
  double mu = cross.eigenvalues.front();
  if (mu < cross.kernel_tolerance) mu = 0.0;
  return mu + dirichlet_min(m.length, m.grid_n);
}

double cylinder_ground_energy_dense(const CylinderModel& m) {
  check_model(m);
  const Eigen::Index k = m.cross_section.rows(), n = m.grid_n;
  if (k * n > kDenseEigenLimit) throw ResourceError("dense cylinder operator exceeds the size guard");
  const Eigen::MatrixXd t = dirichlet_matrix(m.length, m.grid_n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k * n, k * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a.block(i * k, i * k, k, k) += m.cross_section;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (t(i, j) != 0.0) a.block(i * k, j * k, k, k).diagonal().array() += t(i, j);
    }
  }
  return spectrum(0.5 * (a + a.transpose())).eigenvalues.front();
}

}  // namespace cornerspec
