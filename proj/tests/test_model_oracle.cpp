#include <doctest.h>

#include <chrono>
#include <numbers>
#include <random>

#include "cornerspec/catalog.hpp"
#include "cornerspec/cochain.hpp"
#include "cornerspec/cylinder_oracle.hpp"
#include "cornerspec/errors.hpp"
#include "cornerspec/ess_recursion.hpp"
#include "cornerspec/face_spectrum.hpp"
#include "cornerspec/flow_map.hpp"
#include "cornerspec/mesh.hpp"
#include "cornerspec/symbol.hpp"
#include "test_helpers.hpp"

using namespace cornerspec;
using std::numbers::pi;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

ScalarSymbol<double> norm_squared() {
  return {[](const Eigen::VectorXd& xi) { return xi.squaredNorm(); }, 2.0};
}

}  // namespace

TEST_CASE("psi values") {
  CHECK(psi(FlowMap(1), std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(psi(FlowMap(2), 4.0) == 3.75);
  CHECK(psi(FlowMap(3), 1.0) == 0.5);
  CHECK_THROWS_AS(psi(FlowMap(2), 0.0), DomainError);
  CHECK_THROWS_AS(psi(FlowMap(1), -1.0), DomainError);
  CHECK_THROWS_AS(FlowMap(0), DomainError);
}

TEST_CASE("phi values") {
  CHECK(std::abs(phi(FlowMap(1), std::log(2.0), 3.0) - 6.0) <= 1e-12);
  for (int l = 1; l <= 4; ++l) {
    CHECK(phi(FlowMap(l), 3.7, 0.0) == 0.0);
    CHECK(phi(FlowMap(l), -2.0, 0.0) == 0.0);
  }
  CHECK(phi(FlowMap(2), 0.0, 7.0) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK_THROWS_AS(phi(FlowMap(2), 1.0, -1.0), DomainError);
}

TEST_CASE("group and conjugation laws") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ts(-5.0, 5.0), xs(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const FlowMap f(1 + static_cast<int>(rng() % 3));
    const double s = ts(rng), t = ts(rng);
    double x = xs(rng);
    if (x == 0.0) x = 1.0;
    const double lhs = phi(f, s, phi(f, t, x)), rhs = phi(f, s + t, x);
    CHECK(rel_err(lhs, rhs) <= 1e-9);
    const double conj = psi(f, phi(f, t, x)), target = psi(f, x) + t;
    CHECK(std::abs(conj - target) <= 1e-10 * std::max(1.0, std::abs(target)));
  }
}

TEST_CASE("phi is increasing and positive") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> ts(-5.0, 5.0);
  for (int l = 1; l <= 3; ++l) {
    const FlowMap f(l);
    for (int trial = 0; trial < 20; ++trial) {
      const double t = ts(rng);
      double prev = 0.0;
      for (double x = 0.01; x <= 100.0; x *= 1.3) {
        const double y = phi(f, t, x);
        CHECK(y > 0.0);
        CHECK(y > prev);
        prev = y;
      }
    }
  }
}

TEST_CASE("phi converges across the guaranteed range") {
  for (int l = 1; l <= 4; ++l) {
    const FlowMap f(l);
    for (double t : {-50.0, -20.0, -1.0, 0.0, 1.0, 20.0, 50.0})
      for (double x : {1e-6, 1e-3, 0.5, 1.0, 10.0, 1e3, 1e6}) {
        const double y = phi(f, t, x);
        CHECK(std::isfinite(y));
        CHECK(y > 0.0);
        CHECK(std::abs(psi(f, y) - psi(f, x) - t) <= 1e-9 * std::max({1.0, std::abs(psi(f, x)), std::abs(t)}));
      }
  }
}

TEST_CASE("Dirichlet matrix matches the closed form") {
  for (int n : {16, 50, 400}) {
    const double length = 7.0, h = length / (n + 1);
    const double expected = (2 - 2 * std::cos(pi / (n + 1))) / (h * h);
    CHECK(rel_err(dirichlet_min(length, n), expected) <= 1e-10);
    const Eigen::MatrixXd t = dirichlet_matrix(length, n);
    CHECK(t.rows() == n);
    CHECK(t(0, 0) == doctest::Approx(2 / (h * h)));
  }
  CHECK_THROWS_AS(cylinder_ground_energy(cylinder_from_spectrum({0.0}, 1.0, 15)), DomainError);
  CHECK_THROWS_AS(dirichlet_min(0.0, 16), DomainError);
}

TEST_CASE("cylinder ground energy examples") {
  const auto circle = circle_spectrum(2 * pi, 0, 50.0);
  const double e10 = cylinder_ground_energy(cylinder_from_spectrum(circle, 10.0, 400));
  CHECK(rel_err(e10, std::pow(pi / 10, 2)) < 0.01);

  Resolution res;
  const auto sphere = dec_spectrum(mesh_for_geometry(RoundSphereGeometry{2, 1.0}, res), 0).eigenvalues;
  const double e20 = cylinder_ground_energy(cylinder_from_spectrum(sphere, 20.0, 800));
  CHECK(rel_err(e20, std::pow(pi / 20, 2)) < 0.02);

  const auto s2_forms = sphere_spectrum(2, 1.0, 1, 50.0);
  const double e_forms = cylinder_ground_energy(cylinder_from_spectrum(s2_forms, 10.0, 400));
  CHECK(rel_err(e_forms, 2 + std::pow(pi / 10, 2)) < 0.02);
}

TEST_CASE("tensor and dense cylinder solves agree") {
  const auto cx = build_cochain_complex(build_sphere_mesh(1, 1.0));
  CylinderModel m{hodge_laplacian(cx, 1), 10.0, 16};
  const double tensor = cylinder_ground_energy(m);
  const double dense = cylinder_ground_energy_dense(m);
  CHECK(rel_err(tensor, dense) <= 1e-9);

  CylinderModel circ{hodge_laplacian(build_cochain_complex(build_circle_mesh(24, 2 * pi)), 0), 5.0, 32};
  CHECK(rel_err(cylinder_ground_energy(circ), cylinder_ground_energy_dense(circ)) <= 1e-9);

  CylinderModel big{Eigen::MatrixXd::Identity(300, 300), 1.0, 20};
  CHECK_THROWS_AS(cylinder_ground_energy_dense(big), ResourceError);
}

TEST_CASE("cylinder energies sit above the recursion threshold") {
  const auto cc = cornerspec::testing::bundled("cyl_s1.json");
  const double m = *essential_threshold(cc, 0).value;
  const auto circle = circle_spectrum(2 * pi, 0, 50.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double length : {5.0, 10.0, 20.0, 40.0}) {
    const double e = cylinder_ground_energy(cylinder_from_spectrum(circle, length, 400));
    CHECK(e >= m);
    CHECK(e < prev);
    CHECK(e - m <= 1.05 * std::pow(pi / length, 2));
    prev = e;
  }
}

TEST_CASE("symbol rescaling") {
  const auto a = norm_squared();
  Eigen::VectorXd e1(2);
  e1 << 1, 0;
  CHECK(rescale_symbol(a, 2.0)(e1) == 4.0);
  std::mt19937 rng(47);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> pos(0.1, 5.0);
  const auto same = rescale_symbol(a, 1.0);
  for (int i = 0; i < 100; ++i) {
    Eigen::VectorXd xi(3);
    xi << g(rng), g(rng), g(rng);
    CHECK(same(xi) == a(xi));
    const double s = pos(rng), t = pos(rng);
    const auto twice = rescale_symbol(rescale_symbol(a, s), t);
    const auto once = rescale_symbol(a, s * t);
    CHECK(twice.scale() == once.scale());
    CHECK(twice(xi) == once(xi));
  }
  CHECK_THROWS_AS(rescale_symbol(a, 0.0), DomainError);
  CHECK_THROWS_AS(rescale_symbol(a, -1.0), DomainError);
}

TEST_CASE("Cayley symbol limit") {
  const auto a = norm_squared();
  Eigen::VectorXd xi(3);
  xi << 0, 1, 0;
  for (double t : {10.0, 100.0, 1000.0}) {
    const auto c = cayley_symbol_limit(a, xi, t);
    const double x = t * t;
    CHECK(c.deviation == doctest::Approx(2 / std::sqrt(x * x + 1)).epsilon(1e-12));
    CHECK(c.deviation <= c.bound + 1e-15);
    CHECK(c.limit_claimed);
  }
  CHECK(cayley_symbol_limit(a, xi, 1000.0).deviation < 2.1e-6);
  CHECK(cayley_symbol_limit(a, xi, 10.0).deviation < 0.021);

  const ScalarSymbol<double> one([](const Eigen::VectorXd&) { return 1.0; }, 0.0);
  const auto c1 = cayley_symbol_limit(one, xi, 1000.0);
  CHECK(std::abs(c1.value - std::complex<double>(0, 1)) < 1e-15);
  CHECK(!c1.limit_claimed);

  const ScalarSymbol<double> degenerate([](const Eigen::VectorXd& v) { return v[0] * v[0]; }, 2.0);
  CHECK_THROWS_AS(cayley_symbol_limit(degenerate, xi, 10.0), DomainError);

  // long double instantiation
  const ScalarSymbol<long double> al([](const Eigen::Matrix<long double, Eigen::Dynamic, 1>& v) { return v.squaredNorm(); },
                                     2.0L);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> xl(1);
  xl << 1.0L;
  CHECK(cayley_symbol_limit(al, xl, 1000.0L).deviation < 2.1e-6L);
}
