#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "cornerspec/mesh.hpp"

namespace cornerspec {

enum class DualKind { circumcentric, barycentric };

using IntSparse = Eigen::SparseMatrix<int>;

// Integer coboundaries and diagonal Hodge stars of a simplicial mesh.
struct CochainComplex {
  int dim = 0;
  // coboundary[p]: rows = (p+1)-simplices, cols = p-simplices, p = 0..dim-1
  std::vector<IntSparse> coboundary;
  // star[p][i] = dual volume / primal volume of the i-th p-simplex, p = 0..dim
  std::vector<Eigen::VectorXd> star;
  DualKind dual = DualKind::circumcentric;
  bool fallback_used = false;  // circumcentric duals were not all positive

  int cells(int p) const { return static_cast<int>(star.at(p).size()); }
};

// Oriented coboundary D_p of the mesh (transpose of the simplicial boundary).
IntSparse coboundary_matrix(const Mesh& mesh, int p);

// Dual cell volumes of every p-simplex under the given dual construction. May
// contain nonpositive entries for circumcentric duals of badly shaped meshes.
Eigen::VectorXd dual_volumes(const Mesh& mesh, int p, DualKind kind);
Eigen::VectorXd primal_volumes(const Mesh& mesh, int p);

// Circumcentric stars when every dual volume is positive, otherwise
// barycentric (fallback_used set). NumericalError names the simplex when both
// constructions fail.
CochainComplex build_cochain_complex(const Mesh& mesh);
CochainComplex build_cochain_complex(const Mesh& mesh, DualKind kind);

// Symmetrized Hodge Laplacian *^{1/2} (δd + dδ) *^{-1/2} on p-cochains.
Eigen::MatrixXd hodge_laplacian(const CochainComplex& cx, int p);
// The δd part (zero for p = dim) and the dδ part (zero for p = 0).
Eigen::MatrixXd up_laplacian(const CochainComplex& cx, int p);
Eigen::MatrixXd down_laplacian(const CochainComplex& cx, int p);

// True iff D_{p+1} D_p vanishes exactly for every p.
bool coboundaries_compose_to_zero(const CochainComplex& cx);

// Rank over Q of an integer matrix by fraction-free elimination.
int rational_rank(const IntSparse& m);

// dim H^p = n_p - rank D_p - rank D_{p-1}, computed from integer ranks only.
int cohomology_rank(const CochainComplex& cx, int p);

// Kernel dimension of the Hodge Laplacian.
int betti(const CochainComplex& cx, int p);

}  // namespace cornerspec
