#include "cornerspec/ess_recursion.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "cornerspec/errors.hpp"

namespace cornerspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-query memo of face minima keyed by (face id, degree). Restrictions along
// different chains produce the same labeled lattice, so the id is enough.
class Recursion {
 public:
  explicit Recursion(const RecursionOptions& opts) : opts_(opts) {}

  FaceMinimum face_min(const CornerComplex& cc, const FaceId& id, int p) {
    const Face& f = cc.face(id);
    if (p < 0 || p > f.dim) return {kInf, true};
    const auto key = std::make_pair(id, p);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    FaceMinimum out;
    if (is_minimal(cc, id)) {
      if (auto m = std::get_if<MeshGeometry>(&f.geometry)) {
        const int mesh_dim = load_off_mesh(m->path).dim();
        if (mesh_dim != f.dim) {
          throw ValidationError("mesh " + m->path + " has dimension " + std::to_string(mesh_dim) +
                                " but face '" + id + "' has dimension " + std::to_string(f.dim));
        }
      }
      out.value = min_spectrum(face_base_spectrum(f.geometry, p, opts_.resolution));
    } else {
      const CornerComplex sub = restrict_to(cc, id);
      const Threshold t = threshold(sub, p);
      out.value = *t.value;
      out.exact = t.exact;
      auto bs = opts_.bound_states.find(key);
      const bool asserted = bs != opts_.bound_states.end() && !bs->second.empty();
      if (asserted) out.value = std::min(out.value, bs->second.front());
      // Only p > 0 can hide eigenvalues below a positive ray.
      if (p > 0 && !asserted) out.exact = false;
      if (out.value == 0.0) out.exact = true;
    }
    cache_.emplace(key, out);
    return out;
  }

  Threshold threshold(const CornerComplex& cc, int p) {
    Threshold t;
    double m = kInf;
    bool exact = true;
    bool any = false;
    for (const auto& f : cc.faces()) {
      if (f.codim != 1) continue;
      any = true;
      for (int q : {p, p - 1}) {
        if (q == p - 1 && p == 0) continue;
        const FaceMinimum fm = face_min(cc, f.id, q);
        m = std::min(m, fm.value);
        exact = exact && fm.exact;
      }
    }
    if (!any) return t;
    if (std::isinf(m)) throw DomainError("degree " + std::to_string(p) + " has no indicial blocks");
    t.value = m;
    t.exact = exact || m == 0.0;
    return t;
  }

 private:
  const RecursionOptions& opts_;
  std::map<std::pair<FaceId, int>, FaceMinimum> cache_;
};

void check_degree(const CornerComplex& cc, int p) {
  if (p < 0 || p > cc.dim()) {
    throw DomainError("degree " + std::to_string(p) + " outside [0, " + std::to_string(cc.dim()) + "]");
  }
}

bool has_boundary(const CornerComplex& cc) {
  for (const auto& f : cc.faces())
    if (f.codim == 1) return true;
  return false;
}

SpectrumDesc hyperface_spectrum_unchecked(const CornerComplex& cc, const FaceId& h, int q,
                                          const RecursionOptions& opts);

SpectrumDesc full_spectrum_unchecked(const CornerComplex& cc, int p, const RecursionOptions& opts) {
  const FaceId& top = cc.top_face();
  if (!has_boundary(cc)) return face_base_spectrum(cc.face(top).geometry, p, opts.resolution);
  Recursion rec(opts);
  const Threshold t = rec.threshold(cc, p);
  std::vector<double> bound;
  if (auto it = opts.bound_states.find({top, p}); it != opts.bound_states.end()) bound = it->second;
  return {std::move(bound), t.value};
}

SpectrumDesc hyperface_spectrum_unchecked(const CornerComplex& cc, const FaceId& h, int q,
                                          const RecursionOptions& opts) {
  const Face& f = cc.face(h);
  if (q < 0 || q > f.dim) return SpectrumDesc::empty();
  return full_spectrum_unchecked(restrict(cc, h), q, opts);
}

SpectrumDesc indicial_at(const CornerComplex& cc, const FaceId& h, int p, const RecursionOptions& opts) {
  std::optional<SpectrumDesc> lower;
  if (p > 0) lower = hyperface_spectrum_unchecked(cc, h, p - 1, opts);
  return indicial_spectrum(p, hyperface_spectrum_unchecked(cc, h, p, opts), lower);
}

}  // namespace

FaceMinimum face_min_spectrum(const CornerComplex& cc, const FaceId& face, int p,
                              const RecursionOptions& opts) {
  require_valid(cc);
  const Face& f = cc.face(face);
  if (p < 0 || p > f.dim) {
    throw DomainError("degree " + std::to_string(p) + " outside [0, " + std::to_string(f.dim) + "] on '" + face + "'");
  }
  Recursion rec(opts);
  return rec.face_min(cc, face, p);
}

Threshold essential_threshold(const CornerComplex& cc, int p, const RecursionOptions& opts) {
  require_valid(cc);
  check_degree(cc, p);
  Recursion rec(opts);
  return rec.threshold(cc, p);
}

Threshold indicial_threshold(const CornerComplex& cc, int p, const RecursionOptions& opts) {
  require_valid(cc);
  check_degree(cc, p);
  Threshold t;
  double m = kInf;
  for (const auto& h : hyperfaces(cc)) m = std::min(m, min_spectrum(indicial_at(cc, h, p, opts)));
  if (!std::isinf(m)) t.value = m;
  return t;
}

SpectrumDesc full_spectrum(const CornerComplex& cc, int p, const RecursionOptions& opts) {
  require_valid(cc);
  check_degree(cc, p);
  return full_spectrum_unchecked(cc, p, opts);
}

SpectrumDesc hyperface_spectrum(const CornerComplex& cc, const FaceId& hyperface, int q,
                                const RecursionOptions& opts) {
  require_valid(cc);
  if (cc.face(hyperface).codim != 1) throw DomainError("'" + hyperface + "' is not a hyperface");
  return hyperface_spectrum_unchecked(cc, hyperface, q, opts);
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string out = z.real() == 0.0 ? "" : format_real(z.real());
  if (z.imag() < 0.0) {
    out += "-" + format_real(-z.imag());
  } else {
    out += (out.empty() ? "" : "+") + format_real(z.imag());
  }
  return out + "i";
}

std::pair<bool, IndicialCertificate> is_fredholm(const OperatorQuery& q, const RecursionOptions& opts) {
  const auto* shift = std::get_if<LaplacianShift>(&q.kind);
  if (!shift) throw DomainError("Fredholm queries take a Laplacian shift Δ_p - z");
  const CornerComplex& cc = q.complex;
  require_valid(cc);
  check_degree(cc, shift->p);

  Recursion rec(opts);
  IndicialCertificate cert;
  cert.operator_label = "Delta_" + std::to_string(shift->p) + " - z";
  cert.shift = format_complex(shift->z);
  cert.elliptic = true;  // principal symbol |ξ|^2
  bool all_invertible = true;
  for (const auto& h : hyperfaces(cc)) {
    HyperfaceCertificate hc;
    hc.face = h;
    hc.degree = shift->p;
    hc.indicial = indicial_at(cc, h, shift->p, opts);
    hc.exact = rec.face_min(cc, h, shift->p).exact &&
               (shift->p == 0 || rec.face_min(cc, h, shift->p - 1).exact);
    hc.exact = hc.exact || min_spectrum(hc.indicial) == 0.0;
    hc.invertible = !(shift->z.imag() == 0.0 && hc.indicial.contains(shift->z.real()));
    all_invertible = all_invertible && hc.invertible;
    cert.hyperfaces.push_back(std::move(hc));
  }
  cert.verdict = cert.elliptic && all_invertible;
  return {cert.verdict, std::move(cert)};
}

std::pair<bool, IndicialCertificate> is_compact(const OperatorQuery& q, const RecursionOptions& opts) {
  const auto* power = std::get_if<ResolventPower>(&q.kind);
  if (!power) throw DomainError("compactness queries take a resolvent power (1 + Δ_p)^{-s}");
  if (!(power->s > 0.0)) throw DomainError("resolvent power s must be positive");
  const CornerComplex& cc = q.complex;
  require_valid(cc);
  check_degree(cc, power->p);

  IndicialCertificate cert;
  cert.operator_label = "(1 + Delta_" + std::to_string(power->p) + ")^-s";
  cert.shift = format_real(power->s);
  cert.elliptic = true;
  cert.principal_symbol_vanishes = true;  // order -2s < 0
  for (const auto& h : hyperfaces(cc)) {
    HyperfaceCertificate hc;
    hc.face = h;
    hc.degree = power->p;
    hc.indicial = indicial_at(cc, h, power->p, opts);
    // sup over the indicial family of (1 + λ² + μ)^{-s}
    hc.indicial_norm = std::pow(1.0 + min_spectrum(hc.indicial), -power->s);
    hc.invertible = false;
    cert.hyperfaces.push_back(std::move(hc));
  }
  bool all_vanish = true;
  for (const auto& hc : cert.hyperfaces) all_vanish = all_vanish && hc.indicial_norm == 0.0;
  cert.verdict = cert.principal_symbol_vanishes && all_vanish;
  return {cert.verdict, std::move(cert)};
}

std::string certificate_csv(const IndicialCertificate& cert) {
  std::ostringstream os;
  const bool compactness = cert.principal_symbol_vanishes;
  os << "face,degree,threshold," << (compactness ? "indicial_norm" : "verdict") << "\n";
  for (const auto& hc : cert.hyperfaces) {
    os << hc.face << ',' << hc.degree << ',' << format_real(min_spectrum(hc.indicial)) << ',';
    if (compactness) {
      os << format_real(hc.indicial_norm);
    } else {
      os << (hc.invertible ? "invertible" : "not_invertible");
    }
    os << "\n";
  }
  os << "operator,z," << (compactness ? "compact_verdict" : "fredholm_verdict") << "\n";
  os << '"' << cert.operator_label << "\"," << cert.shift << ',' << (cert.verdict ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace cornerspec
