#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cornerspec/geometry_tag.hpp"

namespace cornerspec {

// Sorted vertex ids. Orientation is the one induced by increasing ids.
using Simplex = std::vector<int>;

// Pure simplicial complex with an intrinsic (edge-length) metric. Vertex
// coordinates are optional and only kept for export; all geometry is derived
// from the edge lengths so that flat tori and arc-length circles need no
// embedding.
class Mesh {
 public:
  Mesh() = default;

  // `tops` are the top-dimensional simplices; lower-dimensional faces are
  // generated. `edge_length(a, b)` is queried once per edge with a < b.
  template <typename LengthFn>
  static Mesh from_simplices(int n_vertices, std::vector<Simplex> tops, LengthFn&& edge_length,
                             GeometryTag realizes = NoGeometry{});

  // Euclidean edge lengths from vertex coordinates (one row per vertex).
  static Mesh from_coordinates(Eigen::MatrixXd vertices, std::vector<Simplex> tops,
                               GeometryTag realizes = NoGeometry{});

  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  int count(int k) const { return static_cast<int>(simplices_.at(k).size()); }
  const std::vector<Simplex>& simplices(int k) const { return simplices_.at(k); }
  const Eigen::VectorXd& edge_lengths() const { return edge_lengths_; }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  const GeometryTag& realizes() const { return realizes_; }

  // Index of a sorted k-simplex, or -1 when absent.
  int index_of(const Simplex& s) const;
  double edge_length(int a, int b) const;
  int euler_characteristic() const;

 private:
  void build(int n_vertices, std::vector<Simplex> tops);

  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, int>> index_;
  Eigen::VectorXd edge_lengths_;
  Eigen::MatrixXd vertices_;
  GeometryTag realizes_ = NoGeometry{};
};

// n equal arcs of a circle; edge lengths are arc lengths circumference / n.
Mesh build_circle_mesh(int n, double circumference);

// Flat torus R^2 / (L1 Z x L2 Z) on an n1 x n2 grid, each cell split along
// one diagonal.
Mesh build_torus_mesh(int n1, int n2, double l1, double l2);

// Icosahedron subdivided `subdivisions` times (each triangle into four),
// projected onto the sphere of the given radius.
inline constexpr int kMaxSphereSubdivisions = 6;
Mesh build_sphere_mesh(int subdivisions, double radius);

// OFF reader: "OFF" header, counts line, vertex lines, face lines. Every face
// must have the same vertex count k; the mesh dimension is k - 1.
Mesh load_off_mesh(const std::filesystem::path& path);
Mesh parse_off_mesh(const std::string& text, GeometryTag realizes = NoGeometry{});

// ----------------------------------------------------------------------------

template <typename LengthFn>
Mesh Mesh::from_simplices(int n_vertices, std::vector<Simplex> tops, LengthFn&& edge_length,
                          GeometryTag realizes) {
  Mesh m;
  m.realizes_ = std::move(realizes);
  m.build(n_vertices, std::move(tops));
  if (m.dim() >= 1) {
    m.edge_lengths_.resize(m.count(1));
    for (int e = 0; e < m.count(1); ++e) {
      const auto& s = m.simplices_[1][e];
      m.edge_lengths_[e] = edge_length(s[0], s[1]);
    }
  }
  return m;
}

}  // namespace cornerspec
