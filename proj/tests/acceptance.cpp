#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "cornerspec/catalog.hpp"
#include "cornerspec/cli.hpp"
#include "cornerspec/cochain.hpp"
#include "cornerspec/complex_io.hpp"
#include "cornerspec/cylinder_oracle.hpp"
#include "cornerspec/eigensolver.hpp"
#include "cornerspec/ess_recursion.hpp"
#include "cornerspec/face_spectrum.hpp"
#include "cornerspec/flow_map.hpp"
#include "cornerspec/mesh.hpp"
#include "cornerspec/symbol.hpp"

using namespace cornerspec;
using std::numbers::pi;

namespace {

const std::string kData = CORNERSPEC_DATA_DIR;

const std::vector<std::string> kBoundary{"square.json", "interval.json", "cyl_s1.json", "cyl_s2.json",
                                         "cyl_s3.json", "cyl_mesh.json", "cube_corner.json"};
const std::vector<std::string> kAll{"square.json", "interval.json",   "cyl_s1.json",      "cyl_s2.json",
                                    "cyl_s3.json", "cyl_mesh.json",   "cube_corner.json", "torus_closed.json"};

CornerComplex load(const std::string& name) { return load_complex(kData + "/" + name); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Threshold text printed by the CLI, or the error text on failure.
std::string cli_threshold(const std::string& file, int p) {
  std::ostringstream out, err;
  const int code = cli::run({"threshold", "--input", kData + "/" + file, "--p", std::to_string(p)}, out, err);
  if (code != cli::kOk) return "exit " + std::to_string(code);
  const std::string text = out.str();
  const std::string key = "essential threshold: ";
  const auto pos = text.find(key);
  if (pos == std::string::npos) return "missing";
  return text.substr(pos + key.size(), text.find('\n', pos) - pos - key.size());
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

std::vector<double> nonzero(const std::vector<double>& v, double floor) {
  std::vector<double> out;
  for (double x : v)
    if (x > floor) out.push_back(x);
  return out;
}

Outcome boundary_thresholds() {
  Outcome o;
  for (const auto& f : kBoundary) {
    for (int p : {0, 1}) {
      const std::string t = cli_threshold(f, p);
      if (t != "0") {
        o.pass = false;
        o.detail += f + " p=" + std::to_string(p) + " gave " + t + "; ";
      }
    }
  }
  if (o.pass) o.detail = std::to_string(kBoundary.size()) + " complexes, p=0 and p=1 all exactly 0";
  return o;
}

Outcome s3_threshold() {
  // min σ(Δ_1) = min σ(Δ_2) = 3 on the unit round S^3, fixed before the build
  constexpr double kGolden = 3.0;
  const std::string t = cli_threshold("cyl_s3.json", 2);
  const auto engine = essential_threshold(load("cyl_s3.json"), 2);
  Outcome o;
  o.pass = t == "3" && engine.value && *engine.value == kGolden;
  o.detail = "cli printed " + t + ", engine " + (engine.value ? format_real(*engine.value) : "EMPTY");
  return o;
}

Outcome two_paths() {
  Outcome o;
  int pairs = 0;
  for (const auto& f : kAll) {
    const auto cc = load(f);
    for (int p = 0; p <= cc.dim(); ++p) {
      ++pairs;
      const auto a = essential_threshold(cc, p).value;
      const auto b = indicial_threshold(cc, p).value;
      if (a != b) {
        o.pass = false;
        o.detail += f + " p=" + std::to_string(p) + " differs; ";
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (complex, p) pairs identical";
  return o;
}

Outcome dec_accuracy() {
  Outcome o;
  const auto sphere = dec_spectrum(build_sphere_mesh(4, 1.0), 0);
  const auto groups = multiplicity_groups(sphere.eigenvalues);
  const int first = sphere.kernel_dim;
  int mult = 0;
  for (std::size_t i = first; i < groups.size() && groups[i] == groups[first]; ++i) ++mult;
  const double s2 = sphere.eigenvalues[first];
  const auto circle = dec_spectrum(build_circle_mesh(256, 2 * pi), 0);
  const double c2 = circle.eigenvalues[1];
  o.pass = sphere.kernel_dim == 1 && rel_err(s2, 2.0) < 0.02 && mult == 3 && rel_err(c2, 1.0) < 1e-3;
  std::ostringstream d;
  d << std::setprecision(8) << "S^2 subdiv 4: " << s2 << " x" << mult << " (err " << rel_err(s2, 2.0) * 100
    << "%); circle 256: " << c2 << " (err " << rel_err(c2, 1.0) * 100 << "%)";
  o.detail = d.str();
  return o;
}

Outcome hodge_theorem() {
  struct Case {
    std::string name;
    Mesh mesh;
    std::vector<int> expected;
  };
  const std::vector<Case> cases{{"S^1", build_circle_mesh(3, 2 * pi), {1, 1}},
                                {"T^2", build_torus_mesh(3, 3, 2 * pi, 2 * pi), {1, 2, 1}},
                                {"S^2", build_sphere_mesh(0, 1.0), {1, 0, 1}}};
  Outcome o;
  for (const auto& c : cases) {
    const auto cx = build_cochain_complex(c.mesh);
    std::string row;
    for (int p = 0; p <= cx.dim; ++p) {
      const int b = betti(cx, p), r = cohomology_rank(cx, p);
      if (b != c.expected[p] || r != c.expected[p]) o.pass = false;
      row += (p ? "," : "") + std::to_string(b);
    }
    o.detail += c.name + " (" + row + ") ";
  }
  return o;
}

Outcome structural_exactness() {
  Outcome o;
  std::vector<Mesh> generated{build_circle_mesh(3, 1.0),          build_circle_mesh(64, 2 * pi),
                              build_circle_mesh(256, 2 * pi),     build_torus_mesh(3, 3, 1.0, 1.0),
                              build_torus_mesh(4, 6, 2 * pi, 2 * pi), build_torus_mesh(5, 5, 1.0, 2.0),
                              build_torus_mesh(16, 16, 2 * pi, 2 * pi), build_sphere_mesh(0, 1.0),
                              build_sphere_mesh(1, 1.0),          build_sphere_mesh(2, 1.0),
                              build_sphere_mesh(3, 1.0),          load_off_mesh(kData + "/octahedron.off")};
  int exact = 0, spectral = 0;
  double worst_psd = 0.0, worst_susy = 0.0;
  for (const auto& m : generated) {
    const auto cx = build_cochain_complex(m);
    if (coboundaries_compose_to_zero(cx)) ++exact;
    else o.pass = false;
    int cells = 0;
    for (int k = 0; k <= m.dim(); ++k) cells += m.count(k);
    if (cells > 300) continue;
    ++spectral;
    for (int p = 0; p <= cx.dim; ++p) {
      const Eigen::MatrixXd l = hodge_laplacian(cx, p);
      if (!(l - l.transpose()).isZero(0.0)) o.pass = false;
      const auto ev = spectrum(l).eigenvalues;
      const double ratio = -ev.front() / std::max(ev.back(), 1e-300);
      worst_psd = std::max(worst_psd, ratio);
      if (ratio > 1e-9) o.pass = false;
    }
    for (int p = 0; p < cx.dim; ++p) {
      const auto a = spectrum(up_laplacian(cx, p)).eigenvalues;
      const auto b = spectrum(down_laplacian(cx, p + 1)).eigenvalues;
      const double floor = 1e-9 * (1 + a.back());
      const auto na = nonzero(a, floor), nb = nonzero(b, floor);
      if (na.size() != nb.size()) {
        o.pass = false;
        continue;
      }
      for (std::size_t i = 0; i < na.size(); ++i) worst_susy = std::max(worst_susy, rel_err(na[i], nb[i]));
    }
  }
  if (worst_susy > 1e-8) o.pass = false;
  std::ostringstream d;
  d << exact << "/" << generated.size() << " meshes with D D = 0; " << spectral
    << " meshes <= 300 cells: worst -min/max " << worst_psd << ", worst supersymmetry rel err " << worst_susy;
  o.detail = d.str();
  return o;
}

Outcome cylinder_oracle() {
  Outcome o;
  const double m = *essential_threshold(load("cyl_s1.json"), 0).value;
  const auto circle = circle_spectrum(2 * pi, 0, 100.0);
  double prev = std::numeric_limits<double>::infinity();
  std::ostringstream d;
  d << std::setprecision(6);
  for (double length : {5.0, 10.0, 20.0}) {
    const double e = cylinder_ground_energy(cylinder_from_spectrum(circle, length, 400));
    const double target = std::pow(pi / length, 2);
    if (rel_err(e, target) > 0.05 || !(e < prev) || e < m) o.pass = false;
    d << "L=" << length << ": " << e << " vs " << target << "; ";
    prev = e;
  }
  o.detail = d.str() + "threshold " + format_real(m);
  return o;
}

Outcome flow_laws() {
  Outcome o;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ts(-5.0, 5.0), xs(0.0, 100.0);
  double worst_group = 0.0, worst_conj = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const FlowMap f(1 + i % 3);
    const double s = ts(rng), t = ts(rng);
    double x = xs(rng);
    if (x == 0.0) x = 50.0;
    worst_group = std::max(worst_group, rel_err(phi(f, s, phi(f, t, x)), phi(f, s + t, x)));
    const double target = psi(f, x) + t;
    worst_conj = std::max(worst_conj, std::abs(psi(f, phi(f, t, x)) - target) / std::max(1.0, std::abs(target)));
  }
  const double six = phi(FlowMap(1), std::log(2.0), 3.0);
  o.pass = worst_group <= 1e-9 && worst_conj <= 1e-9 && std::abs(six - 6.0) <= 1e-12;
  std::ostringstream d;
  d << "worst group " << worst_group << ", worst conjugation " << worst_conj << ", |phi_1(ln 2, 3) - 6| = "
    << std::abs(six - 6.0);
  o.detail = d.str();
  return o;
}

Outcome fredholm_duality() {
  Outcome o;
  std::mt19937 rng(99);
  int checks = 0;
  for (const auto& f : kBoundary) {
    const auto cc = load(f);
    for (int p = 0; p <= cc.dim(); ++p) {
      const double m = *essential_threshold(cc, p).value;
      std::uniform_real_distribution<double> re(m - 5.0, m + 5.0), im(0.01, 3.0);
      for (int i = 0; i < 100; ++i) {
        const double z = i == 0 ? m : re(rng);
        const bool fred = is_fredholm({LaplacianShift{p, z}, cc}).first;
        if (fred != (z < m)) o.pass = false;
        ++checks;
      }
      for (int i = 0; i < 10; ++i) {
        const double b = (i % 2 ? 1.0 : -1.0) * im(rng);
        if (!is_fredholm({LaplacianShift{p, {re(rng), b}}, cc}).first) o.pass = false;
        ++checks;
      }
    }
  }
  o.detail = std::to_string(checks) + " shifts checked";
  return o;
}

Outcome compactness() {
  Outcome o;
  const auto torus = load("torus_closed.json");
  const auto [tc, tcert] = is_compact({ResolventPower{0, 1.0}, torus});
  if (!tc) o.pass = false;
  o.detail = std::string("torus_closed ") + (tc ? "compact" : "NOT compact");
  for (const auto& f : kBoundary) {
    const auto cc = load(f);
    const auto [c, cert] = is_compact({ResolventPower{0, 1.0}, cc});
    std::vector<FaceId> named;
    bool nonzero_norms = true;
    for (const auto& h : cert.hyperfaces) {
      named.push_back(h.face);
      nonzero_norms = nonzero_norms && h.indicial_norm > 0.0;
    }
    if (c || named != hyperfaces(cc) || !nonzero_norms) o.pass = false;
  }
  o.detail += "; " + std::to_string(kBoundary.size()) + " boundary complexes not compact, certificates name every hyperface";
  return o;
}

Outcome cayley() {
  const ScalarSymbol<double> a([](const Eigen::VectorXd& xi) { return xi.squaredNorm(); }, 2.0);
  Eigen::VectorXd xi(2);
  xi << 0.6, 0.8;
  Outcome o;
  std::ostringstream d;
  for (double t : {10.0, 100.0, 1000.0}) {
    const auto c = cayley_symbol_limit(a, xi, t);
    if (c.deviation > c.bound + 1e-15) o.pass = false;
    d << "t=" << t << ": " << c.deviation << "; ";
  }
  const auto c = cayley_symbol_limit(a, xi, 1000.0);
  if (!(c.deviation < 2.1e-6)) o.pass = false;
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;  // <= 0: no limit
  };
  const std::vector<Criterion> criteria{
      {1, "p=0/p=1 thresholds exactly 0 via cli", boundary_thresholds, 1.0},
      {2, "cyl_s3 p=2 threshold exactly 3", s3_threshold, 1.0},
      {3, "recursion and indicial path agree", two_paths, 0.0},
      {4, "DEC eigenvalue accuracy", dec_accuracy, 120.0},
      {5, "Betti numbers match integer ranks", hodge_theorem, 0.0},
      {6, "structural exactness", structural_exactness, 0.0},
      {7, "cylinder oracle agreement", cylinder_oracle, 0.0},
      {8, "flow laws", flow_laws, 0.0},
      {9, "Fredholm duality", fredholm_duality, 0.0},
      {10, "compactness criterion", compactness, 0.0},
      {11, "Cayley symbol limit", cayley, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " [over time limit]";
    }
    if (!o.pass) ++failures;
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << secs << " s";
    if (c.limit_seconds > 0.0) t << " / limit " << c.limit_seconds << " s";
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << t.str()
              << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
