#include "cornerspec/face_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cornerspec/catalog.hpp"

namespace cornerspec {

std::string describe(const Resolution& res) {
  std::ostringstream os;
  os << "method=" << (res.method == SpectrumMethod::catalog ? "catalog" : "dec")
     << " cutoff=" << format_real(res.cutoff) << " circle_segments=" << res.circle_segments
     << " torus_grid=" << res.torus_grid << " sphere_subdiv=" << res.sphere_subdivisions
     << " jacobi_tol=" << format_real(res.jacobi_tolerance);
  return os.str();
}

Mesh mesh_for_geometry(const GeometryTag& tag, const Resolution& res) {
  if (auto c = std::get_if<CircleGeometry>(&tag)) return build_circle_mesh(res.circle_segments, c->circumference);
  if (auto t = std::get_if<RectTorusGeometry>(&tag)) {
    if (t->lengths.size() == 1) return build_circle_mesh(res.circle_segments, t->lengths[0]);
    if (t->lengths.size() != 2) throw DomainError("DEC torus meshes exist for dimension <= 2 only");
    return build_torus_mesh(res.torus_grid, res.torus_grid, t->lengths[0], t->lengths[1]);
  }
  if (auto s = std::get_if<RoundSphereGeometry>(&tag)) {
    if (s->dim == 1) return build_circle_mesh(res.circle_segments, 2.0 * std::numbers::pi * s->radius);
    if (s->dim != 2) throw DomainError("round spheres of dimension >= 3 are catalog only");
    return build_sphere_mesh(res.sphere_subdivisions, s->radius);
  }
  if (auto m = std::get_if<MeshGeometry>(&tag)) return load_off_mesh(m->path);
  throw DomainError("no mesh for geometry '" + geometry_kind(tag) + "'");
}

LaplacianSpectrum dec_spectrum(const Mesh& mesh, int p, double tol) {
  const CochainComplex cx = build_cochain_complex(mesh);
  LaplacianSpectrum s = spectrum(hodge_laplacian(cx, p), tol);
  s.degree = p;
  for (double& v : s.eigenvalues)
    if (v < s.kernel_tolerance) v = 0.0;
  return s;
}

namespace {

std::vector<double> below_cutoff(std::vector<double> values, double cutoff) {
  std::erase_if(values, [cutoff](double v) { return v > cutoff; });
  return values;
}

}  // namespace

SpectrumDesc face_base_spectrum(const GeometryTag& tag, int p, const Resolution& res) {
  if (std::holds_alternative<NoGeometry>(tag)) throw DomainError("face has no geometry");
  if (p < 0) throw DomainError("negative form degree");
  if (std::holds_alternative<PointGeometry>(tag)) {
    if (p > 0) throw DomainError("a point carries no " + std::to_string(p) + "-forms");
    return SpectrumDesc::discrete_only({0.0});
  }
  const int dim = geometry_dimension(tag);
  if (dim >= 0 && p > dim) {
    throw DomainError("degree " + std::to_string(p) + " exceeds face dimension " + std::to_string(dim));
  }

  const bool analytic_only =
      std::holds_alternative<RoundSphereGeometry>(tag) && std::get<RoundSphereGeometry>(tag).dim >= 3;
  const bool use_dec = std::holds_alternative<MeshGeometry>(tag) ||
                       (res.method == SpectrumMethod::dec && !analytic_only);
  if (use_dec) {
    const Mesh mesh = mesh_for_geometry(tag, res);
    if (p > mesh.dim()) {
      throw DomainError("degree " + std::to_string(p) + " exceeds mesh dimension " + std::to_string(mesh.dim()));
    }
    return SpectrumDesc::discrete_only(below_cutoff(dec_spectrum(mesh, p, res.jacobi_tolerance).eigenvalues, res.cutoff));
  }
  if (auto c = std::get_if<CircleGeometry>(&tag)) return SpectrumDesc::discrete_only(circle_spectrum(c->circumference, p, res.cutoff));
  if (auto t = std::get_if<RectTorusGeometry>(&tag)) return SpectrumDesc::discrete_only(torus_spectrum(t->lengths, p, res.cutoff));
  if (auto s = std::get_if<RoundSphereGeometry>(&tag)) {
    return SpectrumDesc::discrete_only(sphere_spectrum(s->dim, s->radius, p, res.cutoff));
  }
  throw DomainError("unknown geometry tag");
}

}  // namespace cornerspec
