#include "cornerspec/cochain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "cornerspec/eigensolver.hpp"
#include "cornerspec/errors.hpp"

namespace cornerspec {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Gram matrix of a simplex from its edge lengths: G_ij = <v_i - v_0, v_j - v_0>.
Eigen::MatrixXd simplex_gram(const Mesh& mesh, const Simplex& s) {
  const int k = static_cast<int>(s.size()) - 1;
  Eigen::MatrixXd g(k, k);
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      const double l0i = mesh.edge_length(s[0], s[i]);
      const double l0j = mesh.edge_length(s[0], s[j]);
      const double lij = i == j ? 0.0 : mesh.edge_length(s[i], s[j]);
      g(i - 1, j - 1) = g(j - 1, i - 1) = 0.5 * (l0i * l0i + l0j * l0j - lij * lij);
    }
  }
  return g;
}

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

// Volume of the simplex spanned by the rows of `pts`.
double point_simplex_volume(const std::vector<Eigen::VectorXd>& pts) {
  const int k = static_cast<int>(pts.size()) - 1;
  if (k == 0) return 1.0;
  Eigen::MatrixXd w(pts[0].size(), k);
  for (int i = 1; i <= k; ++i) w.col(i - 1) = pts[i] - pts[0];
  const double det = (w.transpose() * w).determinant();
  return std::sqrt(std::max(det, 0.0)) / factorial(k);
}

// Isometric placement of a top simplex in R^n with vertex 0 at the origin.
std::vector<Eigen::VectorXd> embed(const Mesh& mesh, const Simplex& top) {
  const int n = static_cast<int>(top.size()) - 1;
  std::vector<Eigen::VectorXd> pts(n + 1, Eigen::VectorXd::Zero(n));
  if (n == 0) return pts;
  Eigen::LLT<Eigen::MatrixXd> llt(simplex_gram(mesh, top));
  if (llt.info() != Eigen::Success) {
    throw NumericalError("degenerate simplex " + describe(top) + " (edge lengths violate the simplex inequality)");
  }
  Eigen::MatrixXd l = llt.matrixL();
  for (int i = 1; i <= n; ++i) pts[i] = l.row(i - 1).transpose();
  return pts;
}

Eigen::VectorXd face_center(const std::vector<Eigen::VectorXd>& pts, unsigned mask, DualKind kind) {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (mask & (1u << i)) ids.push_back(i);
  const Eigen::VectorXd& p0 = pts[ids[0]];
  if (kind == DualKind::barycentric || ids.size() == 1) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(p0.size());
    for (int i : ids) c += pts[i];
    return c / static_cast<double>(ids.size());
  }
  // circumcenter c = p0 + E a with E^T E a = |e_i|^2 / 2
  const int k = static_cast<int>(ids.size()) - 1;
  Eigen::MatrixXd e(p0.size(), k);
  for (int i = 1; i <= k; ++i) e.col(i - 1) = pts[ids[i]] - p0;
  Eigen::VectorXd rhs = 0.5 * e.colwise().squaredNorm().transpose();
  Eigen::VectorXd a = (e.transpose() * e).ldlt().solve(rhs);
  return p0 + e * a;
}

}  // namespace

IntSparse coboundary_matrix(const Mesh& mesh, int p) {
  if (p < 0 || p >= mesh.dim()) throw DomainError("coboundary degree out of range");
  std::vector<Eigen::Triplet<int>> trips;
  const auto& rows = mesh.simplices(p + 1);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (int i = 0; i <= p + 1; ++i) {
      Simplex facet = rows[r];
      facet.erase(facet.begin() + i);
      trips.emplace_back(r, mesh.index_of(facet), i % 2 ? -1 : 1);
    }
  }
  IntSparse d(mesh.count(p + 1), mesh.count(p));
  d.setFromTriplets(trips.begin(), trips.end());
  return d;
}

Eigen::VectorXd primal_volumes(const Mesh& mesh, int p) {
  Eigen::VectorXd vol(mesh.count(p));
  for (int i = 0; i < mesh.count(p); ++i) {
    const auto& s = mesh.simplices(p)[i];
    if (p == 0) {
      vol[i] = 1.0;
      continue;
    }
    const double det = simplex_gram(mesh, s).determinant();
    if (!(det > 0.0)) throw NumericalError("degenerate simplex " + describe(s));
    vol[i] = std::sqrt(det) / factorial(p);
  }
  return vol;
}

Eigen::VectorXd dual_volumes(const Mesh& mesh, int p, DualKind kind) {
  const int n = mesh.dim();
  if (p < 0 || p > n) throw DomainError("dual volume degree out of range");
  Eigen::VectorXd dual = Eigen::VectorXd::Zero(mesh.count(p));
  if (p == n) {
    dual.setOnes();
    return dual;
  }
  const unsigned full = (1u << (n + 1)) - 1;
  for (const auto& top : mesh.simplices(n)) {
    const auto pts = embed(mesh, top);
    std::vector<Eigen::VectorXd> centers(full + 1);
    for (unsigned mask = 1; mask <= full; ++mask) centers[mask] = face_center(pts, mask, kind);

    for (unsigned mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) != p + 1) continue;
      Simplex face;
      std::vector<int> rest;
      for (int i = 0; i <= n; ++i) {
        if (mask & (1u << i)) face.push_back(top[i]);
        else rest.push_back(i);
      }
      double total = 0.0;
      // one elementary dual simplex per ordering of the remaining vertices
      do {
        std::vector<Eigen::VectorXd> chain{centers[mask]};
        unsigned cur = mask;
        double sign = 1.0;
        for (int r : rest) {
          const unsigned next = cur | (1u << r);
          if (kind == DualKind::circumcentric) {
            const double side = (centers[next] - centers[cur]).dot(pts[r] - centers[cur]);
            if (side < 0.0) sign = -sign;
          }
          chain.push_back(centers[next]);
          cur = next;
        }
        total += sign * point_simplex_volume(chain);
      } while (std::next_permutation(rest.begin(), rest.end()));
      dual[mesh.index_of(face)] += total;
    }
  }
  return dual;
}

CochainComplex build_cochain_complex(const Mesh& mesh, DualKind kind) {
  CochainComplex cx;
  cx.dim = mesh.dim();
  cx.dual = kind;
  for (int p = 0; p < cx.dim; ++p) cx.coboundary.push_back(coboundary_matrix(mesh, p));
  const double scale = mesh.dim() > 0 ? mesh.edge_lengths().mean() : 1.0;
  for (int p = 0; p <= cx.dim; ++p) {
    Eigen::VectorXd dual = dual_volumes(mesh, p, kind);
    const double floor = 1e-9 * std::pow(scale, cx.dim - p);
    for (int i = 0; i < dual.size(); ++i) {
      if (!(dual[i] > floor)) {
        throw NumericalError("nonpositive " + std::string(kind == DualKind::circumcentric ? "circumcentric" : "barycentric") +
                             " dual volume at " + std::to_string(p) + "-simplex " +
                             describe(mesh.simplices(p)[i]));
      }
    }
    cx.star.push_back(dual.cwiseQuotient(primal_volumes(mesh, p)));
  }
  return cx;
}

CochainComplex build_cochain_complex(const Mesh& mesh) {
  try {
    return build_cochain_complex(mesh, DualKind::circumcentric);
  } catch (const NumericalError&) {
    CochainComplex cx = build_cochain_complex(mesh, DualKind::barycentric);
    cx.fallback_used = true;
    return cx;
  }
}

namespace {

constexpr int kDenseLimit = 4000;

void check_degree(const CochainComplex& cx, int p) {
  if (p < 0 || p > cx.dim) {
    throw DomainError("form degree " + std::to_string(p) + " outside [0, " + std::to_string(cx.dim) + "]");
  }
  if (cx.cells(p) > kDenseLimit) {
    throw ResourceError("Laplacian on " + std::to_string(cx.cells(p)) + " cells exceeds the dense guard");
  }
}

}  // namespace

Eigen::MatrixXd up_laplacian(const CochainComplex& cx, int p) {
  check_degree(cx, p);
  const int n = cx.cells(p);
  if (p == cx.dim) return Eigen::MatrixXd::Zero(n, n);
  const Eigen::SparseMatrix<double> d = cx.coboundary[p].cast<double>();
  const Eigen::VectorXd inv_sqrt = cx.star[p].cwiseSqrt().cwiseInverse();
  Eigen::SparseMatrix<double> scaled = d * inv_sqrt.asDiagonal();
  Eigen::SparseMatrix<double> m = scaled.transpose() * cx.star[p + 1].asDiagonal() * scaled;
  Eigen::MatrixXd dense(m);
  return 0.5 * (dense + dense.transpose());
}

Eigen::MatrixXd down_laplacian(const CochainComplex& cx, int p) {
  check_degree(cx, p);
  const int n = cx.cells(p);
  if (p == 0) return Eigen::MatrixXd::Zero(n, n);
  const Eigen::SparseMatrix<double> d = cx.coboundary[p - 1].cast<double>();
  const Eigen::VectorXd sqrt_star = cx.star[p].cwiseSqrt();
  Eigen::SparseMatrix<double> scaled = sqrt_star.asDiagonal() * d;
  Eigen::SparseMatrix<double> m =
      scaled * cx.star[p - 1].cwiseInverse().asDiagonal() * scaled.transpose();
  Eigen::MatrixXd dense(m);
  return 0.5 * (dense + dense.transpose());
}

Eigen::MatrixXd hodge_laplacian(const CochainComplex& cx, int p) {
  Eigen::MatrixXd l = up_laplacian(cx, p) + down_laplacian(cx, p);
  return 0.5 * (l + l.transpose());
}

bool coboundaries_compose_to_zero(const CochainComplex& cx) {
  for (int p = 0; p + 1 < static_cast<int>(cx.coboundary.size()); ++p) {
    IntSparse prod = cx.coboundary[p + 1] * cx.coboundary[p];
    for (int k = 0; k < prod.outerSize(); ++k)
      for (IntSparse::InnerIterator it(prod, k); it; ++it)
        if (it.value() != 0) return false;
  }
  return true;
}

int rational_rank(const IntSparse& m) {
  using boost::multiprecision::cpp_int;
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols, 0));
  for (int k = 0; k < m.outerSize(); ++k)
    for (IntSparse::InnerIterator it(m, k); it; ++it) a[it.row()][it.col()] = it.value();

  // Bareiss elimination; every division below is exact.
  int rank = 0;
  cpp_int prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int cohomology_rank(const CochainComplex& cx, int p) {
  if (p < 0 || p > cx.dim) throw DomainError("cohomology degree out of range");
  int r = cx.cells(p);
  if (p < cx.dim) r -= rational_rank(cx.coboundary[p]);
  if (p > 0) r -= rational_rank(cx.coboundary[p - 1]);
  return r;
}

int betti(const CochainComplex& cx, int p) {
  return spectrum(hodge_laplacian(cx, p)).kernel_dim;
}

}  // namespace cornerspec
