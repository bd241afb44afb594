#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cornerspec/corner_complex.hpp"

namespace cornerspec {

// Parses the JSON complex document. Mesh paths are resolved against
// `base_dir`. Throws ValidationError on malformed input or unknown keys; the
// returned complex is not yet checked against the lattice invariants.
CornerComplex parse_complex(const std::string& json_text,
                            const std::filesystem::path& base_dir = {});
CornerComplex load_complex(const std::filesystem::path& path);

std::string complex_to_json(const CornerComplex& cc);

// (face id, degree) -> asserted discrete eigenvalues below the face's
// essential threshold. Document shape: {"face": {"2": [1.5, ...]}, ...}.
using BoundStateData = std::map<std::pair<FaceId, int>, std::vector<double>>;

BoundStateData parse_bound_states(const std::string& json_text);
BoundStateData load_bound_states(const std::filesystem::path& path);

}  // namespace cornerspec
