#pragma once

#include <string>

#include "cornerspec/cochain.hpp"
#include "cornerspec/eigensolver.hpp"
#include "cornerspec/geometry_tag.hpp"
#include "cornerspec/mesh.hpp"
#include "cornerspec/spectrum_desc.hpp"

namespace cornerspec {

enum class SpectrumMethod { catalog, dec };

struct Resolution {
  SpectrumMethod method = SpectrumMethod::catalog;
  double cutoff = 100.0;       // eigenvalues above this are dropped
  int circle_segments = 64;
  int torus_grid = 16;
  int sphere_subdivisions = 3;
  double jacobi_tolerance = 1e-12;
};

std::string describe(const Resolution& res);

// DEC mesh realizing a geometry tag at the given resolution (point excluded).
Mesh mesh_for_geometry(const GeometryTag& tag, const Resolution& res);

// DEC Laplacian spectrum on p-forms, kernel eigenvalues snapped to 0.
LaplacianSpectrum dec_spectrum(const Mesh& mesh, int p, double tol = 1e-12);

// Spectrum of Δ_p on a closed face. Analytic tags honour res.method; mesh
// tags always go through DEC; spheres of dimension >= 3 are catalog only.
SpectrumDesc face_base_spectrum(const GeometryTag& tag, int p, const Resolution& res);

}  // namespace cornerspec
