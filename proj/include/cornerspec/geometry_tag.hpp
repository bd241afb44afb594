#pragma once

#include <string>
#include <variant>
#include <vector>

namespace cornerspec {

struct NoGeometry {};
struct PointGeometry {};
struct CircleGeometry {
  double circumference = 0.0;
};
struct RectTorusGeometry {
  std::vector<double> lengths;
};
struct RoundSphereGeometry {
  int dim = 0;
  double radius = 0.0;
};
struct MeshGeometry {
  std::string path;
};

using GeometryTag = std::variant<NoGeometry, PointGeometry, CircleGeometry,
                                 RectTorusGeometry, RoundSphereGeometry, MeshGeometry>;

inline bool operator==(const NoGeometry&, const NoGeometry&) { return true; }
inline bool operator==(const PointGeometry&, const PointGeometry&) { return true; }
inline bool operator==(const CircleGeometry& a, const CircleGeometry& b) {
  return a.circumference == b.circumference;
}
inline bool operator==(const RectTorusGeometry& a, const RectTorusGeometry& b) {
  return a.lengths == b.lengths;
}
inline bool operator==(const RoundSphereGeometry& a, const RoundSphereGeometry& b) {
  return a.dim == b.dim && a.radius == b.radius;
}
inline bool operator==(const MeshGeometry& a, const MeshGeometry& b) { return a.path == b.path; }

// Short kind name as used in input documents ("point", "circle", ...).
std::string geometry_kind(const GeometryTag& tag);

// Intrinsic dimension the tag describes, or -1 for "none" and for meshes
// (mesh dimension is only known after loading the file).
int geometry_dimension(const GeometryTag& tag);

}  // namespace cornerspec
