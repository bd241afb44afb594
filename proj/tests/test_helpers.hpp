#pragma once

#include <string>
#include <vector>

#include "cornerspec/complex_io.hpp"
#include "cornerspec/corner_complex.hpp"

namespace cornerspec::testing {

inline std::string data_path(const std::string& name) { return std::string(CORNERSPEC_DATA_DIR) + "/" + name; }

inline CornerComplex bundled(const std::string& name) { return load_complex(data_path(name)); }

inline const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names{"square.json",  "interval.json",     "cyl_s1.json",
                                              "cyl_s2.json",  "cyl_s3.json",       "cyl_mesh.json",
                                              "cube_corner.json", "torus_closed.json"};
  return names;
}

inline Face make_face(FaceId id, int dim, std::set<FaceId> hyper, GeometryTag g = NoGeometry{}) {
  Face f;
  f.id = std::move(id);
  f.dim = dim;
  f.containing_hyperfaces = std::move(hyper);
  f.geometry = std::move(g);
  return f;
}

}  // namespace cornerspec::testing
