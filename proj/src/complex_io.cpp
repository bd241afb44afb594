#include "cornerspec/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cornerspec/errors.hpp"

namespace cornerspec {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ValidationError("missing key '" + std::string(key) + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

double positive(double v, const char* what, const std::string& where) {
  if (!(v > 0.0)) throw ValidationError(std::string(what) + " must be positive in " + where);
  return v;
}

GeometryTag parse_geometry(const json& g, const std::filesystem::path& base_dir,
                           const std::string& where) {
  if (!g.is_object()) throw ValidationError("geometry must be an object in " + where);
  const auto kind = get_field<std::string>(g, "kind", where);
  if (kind == "none") {
    reject_unknown_keys(g, {"kind"}, where);
    return NoGeometry{};
  }
  if (kind == "point") {
    reject_unknown_keys(g, {"kind"}, where);
    return PointGeometry{};
  }
  if (kind == "circle") {
    reject_unknown_keys(g, {"kind", "circumference"}, where);
    return CircleGeometry{positive(get_field<double>(g, "circumference", where), "circumference", where)};
  }
  if (kind == "rect_torus") {
    reject_unknown_keys(g, {"kind", "lengths"}, where);
    auto lengths = get_field<std::vector<double>>(g, "lengths", where);
    if (lengths.empty()) throw ValidationError("rect_torus needs at least one length in " + where);
    for (double l : lengths) positive(l, "torus length", where);
    return RectTorusGeometry{std::move(lengths)};
  }
  if (kind == "round_sphere") {
    reject_unknown_keys(g, {"kind", "dim", "radius"}, where);
    int dim = get_field<int>(g, "dim", where);
    if (dim < 1) throw ValidationError("round_sphere dim must be positive in " + where);
    return RoundSphereGeometry{dim, positive(get_field<double>(g, "radius", where), "radius", where)};
  }
  if (kind == "mesh") {
    reject_unknown_keys(g, {"kind", "path"}, where);
    std::filesystem::path p = get_field<std::string>(g, "path", where);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return MeshGeometry{p.lexically_normal().string()};
  }
  throw ValidationError("unknown geometry kind '" + kind + "' in " + where);
}

json geometry_json(const GeometryTag& tag) {
  struct Visitor {
    json operator()(const NoGeometry&) const { return {{"kind", "none"}}; }
    json operator()(const PointGeometry&) const { return {{"kind", "point"}}; }
    json operator()(const CircleGeometry& g) const {
      return {{"kind", "circle"}, {"circumference", g.circumference}};
    }
    json operator()(const RectTorusGeometry& g) const {
      return {{"kind", "rect_torus"}, {"lengths", g.lengths}};
    }
    json operator()(const RoundSphereGeometry& g) const {
      return {{"kind", "round_sphere"}, {"dim", g.dim}, {"radius", g.radius}};
    }
    json operator()(const MeshGeometry& g) const { return {{"kind", "mesh"}, {"path", g.path}}; }
  };
  return std::visit(Visitor{}, tag);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + " is not valid JSON: " + e.what());
  }
}

}  // namespace

CornerComplex parse_complex(const std::string& json_text, const std::filesystem::path& base_dir) {
  const json doc = parse_text(json_text, "complex document");
  if (!doc.is_object()) throw ValidationError("complex document must be a JSON object");
  reject_unknown_keys(doc, {"name", "dim", "weights", "faces"}, "complex");

  const auto name = get_field<std::string>(doc, "name", "complex");
  const int dim = get_field<int>(doc, "dim", "complex");
  if (dim < 0) throw ValidationError("complex dim must be nonnegative");

  WeightSystem weights;
  if (doc.contains("weights")) {
    const auto& w = doc.at("weights");
    if (!w.is_object()) throw ValidationError("weights must be an object");
    for (const auto& [id, v] : w.items()) {
      if (!v.is_number_integer()) throw ValidationError("weight for '" + id + "' must be an integer");
      weights.weights[id] = v.get<int>();
    }
  }

  const auto& fs = doc.contains("faces") ? doc.at("faces") : json();
  if (!fs.is_array()) throw ValidationError("faces must be an array");
  std::vector<Face> faces;
  for (const auto& fj : fs) {
    if (!fj.is_object()) throw ValidationError("each face must be an object");
    reject_unknown_keys(fj, {"id", "dim", "contained_in_hyperfaces", "geometry", "above"}, "face");
    Face f;
    f.id = get_field<std::string>(fj, "id", "face");
    const std::string where = "face '" + f.id + "'";
    f.dim = get_field<int>(fj, "dim", where);
    if (fj.contains("contained_in_hyperfaces")) {
      auto hs = get_field<std::vector<std::string>>(fj, "contained_in_hyperfaces", where);
      f.containing_hyperfaces = {hs.begin(), hs.end()};
    }
    f.geometry = fj.contains("geometry") ? parse_geometry(fj.at("geometry"), base_dir, where)
                                         : GeometryTag{NoGeometry{}};
    if (fj.contains("above")) {
      auto up = get_field<std::vector<std::string>>(fj, "above", where);
      f.covers = std::set<FaceId>(up.begin(), up.end());
    }
    faces.push_back(std::move(f));
  }
  return CornerComplex(name, dim, std::move(faces), std::move(weights));
}

CornerComplex load_complex(const std::filesystem::path& path) {
  return parse_complex(read_file(path), path.parent_path());
}

std::string complex_to_json(const CornerComplex& cc) {
  json doc;
  doc["name"] = cc.name();
  doc["dim"] = cc.dim();
  doc["weights"] = json::object();
  for (const auto& [id, w] : cc.weights().weights) doc["weights"][id] = w;
  doc["faces"] = json::array();
  for (const auto& f : cc.faces()) {
    json fj{{"id", f.id},
            {"dim", f.dim},
            {"contained_in_hyperfaces", std::vector<std::string>(f.containing_hyperfaces.begin(),
                                                                 f.containing_hyperfaces.end())},
            {"geometry", geometry_json(f.geometry)}};
    if (f.covers) fj["above"] = std::vector<std::string>(f.covers->begin(), f.covers->end());
    doc["faces"].push_back(std::move(fj));
  }
  return doc.dump(2);
}

BoundStateData parse_bound_states(const std::string& json_text) {
  const json doc = parse_text(json_text, "bound-state document");
  if (!doc.is_object()) throw ValidationError("bound-state document must be an object");
  BoundStateData out;
  for (const auto& [face, per_degree] : doc.items()) {
    if (!per_degree.is_object()) throw ValidationError("bound states for '" + face + "' must be an object");
    for (const auto& [deg, values] : per_degree.items()) {
      int p = 0;
      try {
        std::size_t used = 0;
        p = std::stoi(deg, &used);
        if (used != deg.size() || p < 0) throw std::invalid_argument(deg);
      } catch (const std::exception&) {
        throw ValidationError("bad degree '" + deg + "' for face '" + face + "'");
      }
      std::vector<double> list;
      try {
        list = values.get<std::vector<double>>();
      } catch (const json::exception&) {
        throw ValidationError("bound states for '" + face + "' must be number lists");
      }
      for (double v : list)
        if (!(v >= 0.0)) throw ValidationError("asserted eigenvalues must be nonnegative");
      std::sort(list.begin(), list.end());
      out[{face, p}] = std::move(list);
    }
  }
  return out;
}

BoundStateData load_bound_states(const std::filesystem::path& path) {
  return parse_bound_states(read_file(path));
}

}  // namespace cornerspec
