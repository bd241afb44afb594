#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cornerspec/geometry_tag.hpp"

namespace cornerspec {

using FaceId = std::string;

struct Face {
  FaceId id;
  int dim = 0;
  int codim = 0;  // recomputed by CornerComplex from the ambient dimension
  std::set<FaceId> containing_hyperfaces;
  GeometryTag geometry = NoGeometry{};
  // Faces of dimension dim + 1 whose closure contains this face. Left empty
  // on input, the covers are derived from the hyperface sets.
  std::optional<std::set<FaceId>> covers;

  friend bool operator==(const Face&, const Face&) = default;
};

struct WeightSystem {
  std::map<FaceId, int> weights;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

struct Violation {
  FaceId face;
  std::string rule;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

namespace rules {
inline constexpr const char* kDuplicateId = "duplicate id";
inline constexpr const char* kDimRange = "dim out of range";
inline constexpr const char* kCodimContainment = "codim/containment mismatch";
inline constexpr const char* kUnknownHyperface = "unknown hyperface";
inline constexpr const char* kHyperfaceSelf = "hyperface not self-listed";
inline constexpr const char* kWeightMissing = "weight missing";
inline constexpr const char* kWeightInvalid = "weight invalid";
inline constexpr const char* kWeightStray = "weight on non-hyperface";
inline constexpr const char* kTopFace = "top face count";
inline constexpr const char* kNotGraded = "not graded";
inline constexpr const char* kBadCover = "bad cover";
inline constexpr const char* kMinimalGeometry = "minimal face without geometry";
inline constexpr const char* kGeometryDim = "geometry dimension mismatch";
}  // namespace rules

// Face lattice of a compact manifold with corners together with its weight
// system. Immutable after construction.
//
// The closure order is G < F iff dim G < dim F and every hyperface containing
// F also contains G, unless explicit covers were supplied. Construction never
// throws on invariant violations; call validate_complex for those.
class CornerComplex {
 public:
  CornerComplex() = default;
  CornerComplex(std::string name, int dim, std::vector<Face> faces, WeightSystem weights);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<Face>& faces() const { return faces_; }
  const WeightSystem& weights() const { return weights_; }

  bool has_face(const FaceId& id) const { return index_.count(id) != 0; }
  const Face& face(const FaceId& id) const;
  int weight(const FaceId& hyperface) const;

  // True iff `lower` lies in the closure of `upper` (reflexive).
  bool leq(const FaceId& lower, const FaceId& upper) const;

  // Ids of the codim-0 faces (exactly one when valid).
  std::vector<FaceId> top_faces() const;
  const FaceId& top_face() const;

  friend bool operator==(const CornerComplex& a, const CornerComplex& b) {
    return a.dim_ == b.dim_ && a.faces_ == b.faces_ && a.weights_ == b.weights_;
  }

 private:
  std::string name_;
  int dim_ = 0;
  std::vector<Face> faces_;  // sorted by id
  WeightSystem weights_;
  std::map<FaceId, std::size_t> index_;
  std::map<FaceId, std::set<FaceId>> above_;  // reflexive upward closure

  friend ValidationReport validate_complex(const CornerComplex&);
  ValidationReport construction_issues_;
};

ValidationReport validate_complex(const CornerComplex& cc);

// Throws ValidationError listing every violation when the report is nonempty.
void require_valid(const CornerComplex& cc);

std::vector<FaceId> hyperfaces(const CornerComplex& cc);

// Face lattice below the hyperface H, with H as the new codim-0 face and the
// induced weights: a hyperface F of H gets the weight of the ambient
// hyperface F' != H whose intersection with H contains F.
CornerComplex restrict(const CornerComplex& cc, const FaceId& hyperface);

// Iterated restriction down to an arbitrary face F, so that F becomes the
// codim-0 face. The result does not depend on the chain of hyperfaces taken.
CornerComplex restrict_to(const CornerComplex& cc, const FaceId& face);

std::vector<FaceId> minimal_faces(const CornerComplex& cc);

bool is_minimal(const CornerComplex& cc, const FaceId& id);

}  // namespace cornerspec
