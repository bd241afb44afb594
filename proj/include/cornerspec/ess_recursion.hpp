#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cornerspec/complex_io.hpp"
#include "cornerspec/corner_complex.hpp"
#include "cornerspec/face_spectrum.hpp"
#include "cornerspec/spectrum_desc.hpp"

namespace cornerspec {

struct RecursionOptions {
  BoundStateData bound_states;
  Resolution resolution;
  bool certified_only = false;  // annotate values that are only upper bounds
};

// A face or threshold minimum. `exact` is false when the value may sit above
// the true minimum because an intermediate noncompact face could carry
// unknown eigenvalues below its essential spectrum. +∞ marks an absent block.
struct FaceMinimum {
  double value = 0.0;
  bool exact = true;
};

// nullopt value: no essential spectrum (closed manifold).
struct Threshold {
  std::optional<double> value;
  bool exact = true;
};

// min σ(Δ_p) on the face F of cc (F a hyperface or the codim-0 face).
FaceMinimum face_min_spectrum(const CornerComplex& cc, const FaceId& face, int p,
                              const RecursionOptions& opts = {});

// σ_ess(Δ_p) = [m, ∞) on the interior of cc, with m = min over hyperfaces H of
// m_H^(0) for p = 0 and min{m_H^(p), m_H^(p-1)} for p > 0.
Threshold essential_threshold(const CornerComplex& cc, int p, const RecursionOptions& opts = {});

// The same threshold assembled through spectrum_core: min over hyperfaces of
// min_spectrum(indicial_spectrum(...)) on full face spectra.
Threshold indicial_threshold(const CornerComplex& cc, int p, const RecursionOptions& opts = {});

// Closed cc: the discrete face spectrum. Otherwise the ray [m, ∞) plus the
// asserted bound states of the codim-0 face.
SpectrumDesc full_spectrum(const CornerComplex& cc, int p, const RecursionOptions& opts = {});

// Full spectrum of Δ_q on the hyperface H as a manifold in its own right;
// empty when q is outside [0, dim H].
SpectrumDesc hyperface_spectrum(const CornerComplex& cc, const FaceId& hyperface, int q,
                                const RecursionOptions& opts = {});

// Δ_p - z
struct LaplacianShift {
  int p = 0;
  std::complex<double> z;
};
// (1 + Δ_p)^{-s}
struct ResolventPower {
  int p = 0;
  double s = 1.0;
};

struct OperatorQuery {
  std::variant<LaplacianShift, ResolventPower> kind;
  CornerComplex complex;
};

struct HyperfaceCertificate {
  FaceId face;
  int degree = 0;
  SpectrumDesc indicial;      // σ of the indicial family of Δ_p at this face
  bool exact = true;
  bool invertible = true;     // Fredholm queries: z outside the indicial spectrum
  double indicial_norm = 0.0; // compactness queries: norm of the indicial element
};

struct IndicialCertificate {
  std::string operator_label;
  std::string shift;          // z for Fredholm queries, s for compactness queries
  bool elliptic = true;
  bool principal_symbol_vanishes = false;
  std::vector<HyperfaceCertificate> hyperfaces;
  bool verdict = false;
};

std::pair<bool, IndicialCertificate> is_fredholm(const OperatorQuery& q, const RecursionOptions& opts = {});
std::pair<bool, IndicialCertificate> is_compact(const OperatorQuery& q, const RecursionOptions& opts = {});

// One row per hyperface (face, degree, threshold, verdict) and a summary row.
std::string certificate_csv(const IndicialCertificate& cert);

std::string format_complex(std::complex<double> z);

}  // namespace cornerspec
