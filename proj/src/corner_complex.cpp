#include "cornerspec/corner_complex.hpp"

#include <algorithm>
#include <sstream>

#include "cornerspec/errors.hpp"

namespace cornerspec {

std::string geometry_kind(const GeometryTag& tag) {
  struct Visitor {
    std::string operator()(const NoGeometry&) const { return "none"; }
    std::string operator()(const PointGeometry&) const { return "point"; }
    std::string operator()(const CircleGeometry&) const { return "circle"; }
    std::string operator()(const RectTorusGeometry&) const { return "rect_torus"; }
    std::string operator()(const RoundSphereGeometry&) const { return "round_sphere"; }
    std::string operator()(const MeshGeometry&) const { return "mesh"; }
  };
  return std::visit(Visitor{}, tag);
}

int geometry_dimension(const GeometryTag& tag) {
  struct Visitor {
    int operator()(const NoGeometry&) const { return -1; }
    int operator()(const PointGeometry&) const { return 0; }
    int operator()(const CircleGeometry&) const { return 1; }
    int operator()(const RectTorusGeometry& g) const { return static_cast<int>(g.lengths.size()); }
    int operator()(const RoundSphereGeometry& g) const { return g.dim; }
    int operator()(const MeshGeometry&) const { return -1; }
  };
  return std::visit(Visitor{}, tag);
}

namespace {

bool is_subset(const std::set<FaceId>& a, const std::set<FaceId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

CornerComplex::CornerComplex(std::string name, int dim, std::vector<Face> faces,
                             WeightSystem weights)
    : name_(std::move(name)), dim_(dim), weights_(std::move(weights)) {
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return a.id < b.id; });
  for (auto& f : faces) {
    if (index_.count(f.id)) {
      construction_issues_.push_back({f.id, rules::kDuplicateId, "face id appears more than once"});
      continue;
    }
    f.codim = dim_ - f.dim;
    index_[f.id] = faces_.size();
    faces_.push_back(std::move(f));
  }

  // Derived covers: F covers G iff G < F with nothing strictly between.
  auto below = [&](const Face& g, const Face& f) {
    return g.dim < f.dim && is_subset(f.containing_hyperfaces, g.containing_hyperfaces);
  };
  for (auto& g : faces_) {
    if (g.covers) {
      std::set<FaceId> kept;
      for (const auto& c : *g.covers) {
        if (!index_.count(c)) {
          construction_issues_.push_back({g.id, rules::kBadCover, "unknown face '" + c + "'"});
        } else {
          kept.insert(c);
        }
      }
      g.covers = std::move(kept);
      continue;
    }
    std::set<FaceId> covers;
    for (const auto& f : faces_) {
      if (!below(g, f)) continue;
      bool between = false;
      for (const auto& h : faces_) {
        if (below(g, h) && below(h, f)) {
          between = true;
          break;
        }
      }
      if (!between) covers.insert(f.id);
    }
    g.covers = std::move(covers);
  }

  // Upward closure; covers strictly raise dim when valid, but guard cycles
  // from malformed input by bounding the walk.
  for (const auto& g : faces_) {
    std::set<FaceId> seen{g.id};
    std::vector<FaceId> stack{g.id};
    while (!stack.empty()) {
      FaceId cur = stack.back();
      stack.pop_back();
      for (const auto& c : *faces_[index_.at(cur)].covers) {
        if (seen.insert(c).second) stack.push_back(c);
      }
    }
    above_[g.id] = std::move(seen);
  }
}

const Face& CornerComplex::face(const FaceId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("no face with id '" + id + "' in complex " + name_);
  return faces_[it->second];
}

int CornerComplex::weight(const FaceId& hyperface) const {
  auto it = weights_.weights.find(hyperface);
  if (it == weights_.weights.end()) throw DomainError("no weight for '" + hyperface + "'");
  return it->second;
}

bool CornerComplex::leq(const FaceId& lower, const FaceId& upper) const {
  auto it = above_.find(lower);
  if (it == above_.end()) throw DomainError("no face with id '" + lower + "'");
  if (!has_face(upper)) throw DomainError("no face with id '" + upper + "'");
  return it->second.count(upper) != 0;
}

std::vector<FaceId> CornerComplex::top_faces() const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.codim == 0) out.push_back(f.id);
  return out;
}

const FaceId& CornerComplex::top_face() const {
  for (const auto& f : faces_)
    if (f.codim == 0) return f.id;
  throw ValidationError("complex " + name_ + " has no codim-0 face");
}

ValidationReport validate_complex(const CornerComplex& cc) {
  ValidationReport report = cc.construction_issues_;
  auto add = [&](const FaceId& id, const char* rule, std::string detail) {
    report.push_back({id, rule, std::move(detail)});
  };

  std::set<FaceId> hyper;
  for (const auto& f : cc.faces())
    if (f.codim == 1) hyper.insert(f.id);

  int top_count = 0;
  for (const auto& f : cc.faces()) {
    if (f.dim < 0 || f.dim > cc.dim()) {
      add(f.id, rules::kDimRange, "dim " + std::to_string(f.dim) + " outside [0, " +
                                      std::to_string(cc.dim()) + "]");
      continue;
    }
    if (f.codim == 0) ++top_count;
    if (static_cast<int>(f.containing_hyperfaces.size()) != f.codim) {
      add(f.id, rules::kCodimContainment,
          "codim " + std::to_string(f.codim) + " but " +
              std::to_string(f.containing_hyperfaces.size()) + " containing hyperfaces");
    }
    for (const auto& h : f.containing_hyperfaces) {
      if (!hyper.count(h)) add(f.id, rules::kUnknownHyperface, "'" + h + "' is not a hyperface");
    }
    if (f.codim == 1 && !f.containing_hyperfaces.count(f.id)) {
      add(f.id, rules::kHyperfaceSelf, "a hyperface must list itself");
    }
    for (const auto& c : *f.covers) {
      const Face& up = cc.face(c);
      if (up.dim != f.dim + 1) {
        add(f.id, rules::kNotGraded, "covering face '" + c + "' has dim " + std::to_string(up.dim));
      } else if (!is_subset(up.containing_hyperfaces, f.containing_hyperfaces)) {
        add(f.id, rules::kBadCover, "'" + c + "' lies on a hyperface not containing this face");
      }
    }
    if (f.codim > 0 && f.covers->empty()) {
      add(f.id, rules::kNotGraded, "proper face with no covering face");
    }

    const int gdim = geometry_dimension(f.geometry);
    const bool none = std::holds_alternative<NoGeometry>(f.geometry);
    if (!none && !std::holds_alternative<MeshGeometry>(f.geometry) && gdim != f.dim) {
      add(f.id, rules::kGeometryDim,
          geometry_kind(f.geometry) + " of dim " + std::to_string(gdim) + " on a face of dim " +
              std::to_string(f.dim));
    }
    if (none && is_minimal(cc, f.id)) {
      add(f.id, rules::kMinimalGeometry, "minimal faces need a concrete geometry");
    }
  }
  if (top_count != 1) {
    add(cc.name(), rules::kTopFace,
        "expected exactly one codim-0 face, found " + std::to_string(top_count));
  }

  for (const auto& h : hyper) {
    auto it = cc.weights().weights.find(h);
    if (it == cc.weights().weights.end()) {
      add(h, rules::kWeightMissing, "hyperface has no weight");
    } else if (it->second < 1) {
      add(h, rules::kWeightInvalid, "weight " + std::to_string(it->second) + " < 1");
    }
  }
  for (const auto& [id, w] : cc.weights().weights) {
    if (!hyper.count(id)) add(id, rules::kWeightStray, "weight given for a face that is not a hyperface");
  }
  return report;
}

void require_valid(const CornerComplex& cc) {
  auto report = validate_complex(cc);
  if (report.empty()) return;
  std::ostringstream os;
  os << "invalid complex " << cc.name() << ":";
  for (const auto& v : report) os << "\n  " << v.face << ": " << v.rule << " (" << v.detail << ")";
  throw ValidationError(os.str());
}

std::vector<FaceId> hyperfaces(const CornerComplex& cc) {
  require_valid(cc);
  std::vector<FaceId> out;
  for (const auto& f : cc.faces())
    if (f.codim == 1) out.push_back(f.id);
  return out;
}

bool is_minimal(const CornerComplex& cc, const FaceId& id) {
  for (const auto& f : cc.faces()) {
    if (f.id != id && cc.leq(f.id, id)) return false;
  }
  return true;
}

std::vector<FaceId> minimal_faces(const CornerComplex& cc) {
  std::vector<FaceId> out;
  for (const auto& f : cc.faces())
    if (is_minimal(cc, f.id)) out.push_back(f.id);
  return out;
}

CornerComplex restrict(const CornerComplex& cc, const FaceId& hyperface) {
  if (!cc.has_face(hyperface) || cc.face(hyperface).codim != 1) {
    throw DomainError("'" + hyperface + "' is not a hyperface of " + cc.name());
  }
  const Face& h = cc.face(hyperface);

  std::vector<const Face*> inside;
  for (const auto& f : cc.faces())
    if (cc.leq(f.id, hyperface)) inside.push_back(&f);

  std::vector<FaceId> new_hyper;
  for (const Face* f : inside)
    if (f->dim == h.dim - 1) new_hyper.push_back(f->id);

  WeightSystem weights;
  for (const auto& id : new_hyper) {
    // The second ambient hyperface through this codim-2 face.
    for (const auto& amb : cc.face(id).containing_hyperfaces) {
      if (amb != hyperface) {
        weights.weights[id] = cc.weight(amb);
        break;
      }
    }
  }

  std::vector<Face> faces;
  for (const Face* f : inside) {
    Face g;
    g.id = f->id;
    g.dim = f->dim;
    g.geometry = f->geometry;
    for (const auto& nh : new_hyper)
      if (cc.leq(f->id, nh)) g.containing_hyperfaces.insert(nh);
    std::set<FaceId> covers;
    for (const auto& c : *f->covers)
      if (cc.leq(c, hyperface)) covers.insert(c);
    g.covers = std::move(covers);
    faces.push_back(std::move(g));
  }
  return CornerComplex(cc.name() + "|" + hyperface, h.dim, std::move(faces), std::move(weights));
}

CornerComplex restrict_to(const CornerComplex& cc, const FaceId& face) {
  if (!cc.has_face(face)) throw DomainError("no face '" + face + "' in " + cc.name());
  CornerComplex sub = cc;
  while (sub.face(face).codim > 0) sub = restrict(sub, *sub.face(face).containing_hyperfaces.begin());
  return sub;
}

}  // namespace cornerspec
