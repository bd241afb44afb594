#include "cornerspec/flow_map.hpp"

#include <cmath>
#include <string>

#include "cornerspec/errors.hpp"

namespace cornerspec {

FlowMap::FlowMap(int l) : l_(l) {
  if (l < 1) throw DomainError("flow weight l must be >= 1, got " + std::to_string(l));
}

namespace {

// ψ_l(e^u) and its u-derivative, l > 1
double psi_log(int l, double u) { return std::exp(u) + std::exp((1 - l) * u) / (1 - l); }
double dpsi_log(int l, double u) { return std::exp(u) + std::exp((1 - l) * u); }

}  // namespace

double psi(const FlowMap& f, double x) {
  if (!(x > 0.0)) throw DomainError("ψ_l is defined on (0, ∞)");
  const int l = f.weight();
  if (l == 1) return std::log(x);
  return x + std::pow(x, 1 - l) / (1 - l);
}

double phi(const FlowMap& f, double t, double x) {
  if (x < 0.0) throw DomainError("φ_l acts on [0, ∞)");
  if (x == 0.0) return 0.0;
  const int l = f.weight();
  if (l == 1) return std::exp(t) * x;
  if (t == 0.0) return x;

  const double target = psi(f, x) + t;
  auto g = [&](double u) { return psi_log(l, u) - target; };

  const double u0 = std::log(x);
  double width = std::abs(t) + 1.0;
  double lo = u0 - width, hi = u0 + width;
  // ψ_l runs from -∞ to +∞, so widening always brackets the root
  for (int i = 0; g(lo) > 0.0; ++i) {
    if (i == 60) throw NumericalError("φ_l: could not bracket from below");
    lo -= (width *= 2.0);
  }
  width = std::abs(t) + 1.0;
  for (int i = 0; g(hi) < 0.0; ++i) {
    if (i == 60) throw NumericalError("φ_l: could not bracket from above");
    hi += (width *= 2.0);
  }

  double u = t > 0.0 ? std::min(hi, u0 + t) : std::max(lo, u0 - 0.5);
  if (!(u > lo && u < hi)) u = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double gu = g(u);
    if (gu == 0.0) return std::exp(u);
    if (gu < 0.0) lo = u;
    else hi = u;
    double next = u - gu / dpsi_log(l, u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - u);
    u = next;
    if (step <= 1e-15 * std::max(1.0, std::abs(u)) || hi - lo <= 1e-15 * std::max(1.0, std::abs(u))) {
      return std::exp(u);
    }
  }
  throw NumericalError("φ_l: inversion of ψ_l did not converge");
}

}  // namespace cornerspec
