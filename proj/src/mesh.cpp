#include "cornerspec/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "cornerspec/errors.hpp"

namespace cornerspec {

void Mesh::build(int n_vertices, std::vector<Simplex> tops) {
  if (tops.empty()) throw DomainError("mesh has no simplices");
  const int d = static_cast<int>(tops.front().size()) - 1;
  std::vector<std::set<Simplex>> by_dim(d + 1);
  for (auto& t : tops) {
    if (static_cast<int>(t.size()) != d + 1) throw DomainError("mixed simplex dimensions in mesh");
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
      throw DomainError("simplex with repeated vertex");
    }
    for (int v : t)
      if (v < 0 || v >= n_vertices) throw DomainError("simplex vertex out of range");
    // every nonempty subset is a face
    const int n = d + 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(t[i]);
      by_dim[s.size() - 1].insert(std::move(s));
    }
  }
  // Isolated vertices are kept so indices match the input numbering.
  for (int v = 0; v < n_vertices; ++v) by_dim[0].insert(Simplex{v});

  simplices_.assign(d + 1, {});
  index_.assign(d + 1, {});
  for (int k = 0; k <= d; ++k) {
    simplices_[k].assign(by_dim[k].begin(), by_dim[k].end());
    for (int i = 0; i < static_cast<int>(simplices_[k].size()); ++i) index_[k][simplices_[k][i]] = i;
  }
}

Mesh Mesh::from_coordinates(Eigen::MatrixXd vertices, std::vector<Simplex> tops,
                            GeometryTag realizes) {
  const Eigen::MatrixXd& v = vertices;
  Mesh m = from_simplices(
      static_cast<int>(v.rows()), std::move(tops),
      [&](int a, int b) { return (v.row(a) - v.row(b)).norm(); }, std::move(realizes));
  m.vertices_ = std::move(vertices);
  return m;
}

int Mesh::index_of(const Simplex& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k > dim()) return -1;
  auto it = index_[k].find(s);
  return it == index_[k].end() ? -1 : it->second;
}

double Mesh::edge_length(int a, int b) const {
  const int e = index_of(a < b ? Simplex{a, b} : Simplex{b, a});
  if (e < 0) throw DomainError("no such edge");
  return edge_lengths_[e];
}

int Mesh::euler_characteristic() const {
  int chi = 0;
  for (int k = 0; k <= dim(); ++k) chi += (k % 2 ? -1 : 1) * count(k);
  return chi;
}

Mesh build_circle_mesh(int n, double circumference) {
  if (n < 3) throw DomainError("circle mesh needs at least 3 segments");
  if (!(circumference > 0.0)) throw DomainError("circumference must be positive");
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  const double h = circumference / n;
  return Mesh::from_simplices(n, std::move(edges), [h](int, int) { return h; },
                              CircleGeometry{circumference});
}

Mesh build_torus_mesh(int n1, int n2, double l1, double l2) {
  if (n1 < 3 || n2 < 3) throw DomainError("torus grid must be at least 3 x 3");
  if (!(l1 > 0.0 && l2 > 0.0)) throw DomainError("torus lengths must be positive");
  auto id = [n2](int i, int j) { return i * n2 + j; };
  // With an even row count, odd rows are shifted by half a cell and the
  // triangles are isosceles; otherwise every cell is cut along a diagonal.
  const bool staggered = n2 % 2 == 0;
  std::vector<Simplex> tris;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const int ip = (i + 1) % n1, jp = (j + 1) % n2;
      const int a = id(i, j), b = id(ip, j), c = id(i, jp), d = id(ip, jp);
      if (!staggered || j % 2 == 1) {
        tris.push_back({a, b, d});
        tris.push_back({a, c, d});
      } else {
        tris.push_back({a, b, c});
        tris.push_back({b, c, d});
      }
    }
  }
  const double h1 = l1 / n1, h2 = l2 / n2;
  auto length = [=](int a, int b) {
    auto wrap = [](double d, double n) {
      d = std::fmod(d, n);
      if (d < 0) d += n;
      return std::min(d, n - d);
    };
    auto x = [=](int v) { return v / n2 + (staggered && (v % n2) % 2 == 1 ? 0.5 : 0.0); };
    const double di = wrap(x(a) - x(b), n1);
    const double dj = wrap(static_cast<double>(a % n2 - b % n2), n2);
    return std::hypot(di * h1, dj * h2);
  };
  return Mesh::from_simplices(n1 * n2, std::move(tris), length, RectTorusGeometry{{l1, l2}});
}

Mesh build_sphere_mesh(int subdivisions, double radius) {
  if (subdivisions < 0) throw DomainError("subdivisions must be nonnegative");
  if (subdivisions > kMaxSphereSubdivisions) {
    throw ResourceError("sphere subdivisions " + std::to_string(subdivisions) + " exceed the guard " +
                        std::to_string(kMaxSphereSubdivisions));
  }
  if (!(radius > 0.0)) throw DomainError("radius must be positive");

  const double t = std::numbers::phi;
  std::vector<Eigen::Vector3d> pts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8}, {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8},
      {3, 8, 9}, {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};
  for (auto& p : pts) p.normalize();

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      pts.push_back((pts[a] + pts[b]).normalized());
      const int idx = static_cast<int>(pts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& [a, b, c] : tris) {
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }

  Eigen::MatrixXd v(pts.size(), 3);
  for (std::size_t i = 0; i < pts.size(); ++i) v.row(i) = radius * pts[i].transpose();
  std::vector<Simplex> tops;
  tops.reserve(tris.size());
  for (const auto& [a, b, c] : tris) tops.push_back({a, b, c});
  return Mesh::from_coordinates(std::move(v), std::move(tops), RoundSphereGeometry{2, radius});
}

namespace {

// Next non-empty, non-comment line split into tokens.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    tokens.clear();
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) return true;
  }
  return false;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ValidationError("OFF: bad number '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ValidationError("OFF: bad integer '" + s + "'");
  return v;
}

}  // namespace

Mesh parse_off_mesh(const std::string& text, GeometryTag realizes) {
  std::istringstream in(text);
  std::vector<std::string> tok;
  if (!next_tokens(in, tok) || tok[0] != "OFF") throw ValidationError("OFF: missing header");
  tok.erase(tok.begin());
  if (tok.empty() && !next_tokens(in, tok)) throw ValidationError("OFF: missing counts line");
  if (tok.size() < 2) throw ValidationError("OFF: counts line needs vertex and face counts");
  const int nv = to_int(tok[0]), nf = to_int(tok[1]);
  if (nv <= 0 || nf <= 0) throw ValidationError("OFF: empty mesh");

  std::vector<std::vector<double>> coords;
  for (int i = 0; i < nv; ++i) {
    if (!next_tokens(in, tok)) throw ValidationError("OFF: truncated vertex list");
    std::vector<double> c;
    for (const auto& t : tok) c.push_back(to_double(t));
    if (!coords.empty() && c.size() != coords.front().size()) {
      throw ValidationError("OFF: vertices with differing coordinate counts");
    }
    coords.push_back(std::move(c));
  }
  std::vector<Simplex> tops;
  for (int i = 0; i < nf; ++i) {
    if (!next_tokens(in, tok)) throw ValidationError("OFF: truncated face list");
    const int k = to_int(tok[0]);
    if (k < 1 || static_cast<int>(tok.size()) < k + 1) throw ValidationError("OFF: bad face line");
    Simplex s;
    for (int j = 1; j <= k; ++j) s.push_back(to_int(tok[j]));
    if (!tops.empty() && s.size() != tops.front().size()) {
      throw ValidationError("OFF: faces must all be simplices of one dimension");
    }
    tops.push_back(std::move(s));
  }
  const int ambient = static_cast<int>(coords.front().size());
  if (static_cast<int>(tops.front().size()) - 1 > ambient) {
    throw ValidationError("OFF: simplex dimension exceeds coordinate dimension");
  }
  Eigen::MatrixXd v(nv, ambient);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < ambient; ++j) v(i, j) = coords[i][j];
  try {
    return Mesh::from_coordinates(std::move(v), std::move(tops), std::move(realizes));
  } catch (const DomainError& e) {
    throw ValidationError(std::string("OFF: ") + e.what());
  }
}

Mesh load_off_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open mesh file " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_off_mesh(os.str(), MeshGeometry{path.string()});
}

}  // namespace cornerspec
