#include "cornerspec/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "cornerspec/errors.hpp"

namespace cornerspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void append(std::vector<double>& out, double value, long long mult) {
  for (long long i = 0; i < mult; ++i) out.push_back(value);
}

void check_cutoff(double cutoff) {
  if (!(cutoff >= 0.0) || std::isinf(cutoff)) throw DomainError("catalog cutoff must be finite and nonnegative");
}

}  // namespace

std::vector<double> circle_spectrum(double circumference, int p, double cutoff) {
  return torus_spectrum({circumference}, p, cutoff);
}

std::vector<double> torus_spectrum(const std::vector<double>& lengths, int p, double cutoff) {
  check_cutoff(cutoff);
  const int d = static_cast<int>(lengths.size());
  if (d == 0) throw DomainError("torus needs at least one length");
  if (p < 0 || p > d) throw DomainError("form degree out of range for the torus");
  const long long mult = binomial(d, p);

  std::vector<double> out;
  std::vector<double> freq(d);
  for (int i = 0; i < d; ++i) freq[i] = kTwoPi / lengths[i];
  // enumerate the box of lattice points that can fall under the cutoff
  std::vector<int> bound(d);
  for (int i = 0; i < d; ++i) bound[i] = static_cast<int>(std::floor(std::sqrt(cutoff) / freq[i]));
  std::vector<int> k(d);
  std::function<void(int, double)> walk = [&](int axis, double partial) {
    if (partial > cutoff) return;
    if (axis == d) {
      append(out, partial, mult);
      return;
    }
    for (int j = -bound[axis]; j <= bound[axis]; ++j) {
      const double w = j * freq[axis];
      walk(axis + 1, partial + w * w);
    }
  };
  walk(0, 0.0);
  std::sort(out.begin(), out.end());
  return out;
}

double so_irrep_dimension(int N, const std::vector<int>& weight) {
  if (N < 2) throw DomainError("SO(N) needs N >= 2");
  const int r = N / 2;
  std::vector<double> l(r, 0.0), rho(r);
  for (int i = 0; i < r; ++i) {
    rho[i] = (N % 2) ? r - i - 0.5 : r - i - 1.0;
    l[i] = (i < static_cast<int>(weight.size()) ? weight[i] : 0) + rho[i];
  }
  double dim = 1.0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      dim *= (l[i] - l[j]) * (l[i] + l[j]) / ((rho[i] - rho[j]) * (rho[i] + rho[j]));
    }
    if (N % 2) dim *= l[i] / rho[i];
  }
  return dim;
}

long long sphere_coclosed_multiplicity(int n, int p, int k) {
  if (n < 1 || k < 1 || p < 0 || p > n - 1) return 0;
  const int q = std::min(p, n - 1 - p);  // Hodge duality: coclosed p <-> coclosed n-1-p
  const int N = n + 1;
  std::vector<int> weight(N / 2, 0);
  weight[0] = k;
  for (int i = 1; i <= q; ++i) weight[i] = 1;
  double dim = so_irrep_dimension(N, weight);
  if (N % 2 == 0 && q + 1 == N / 2) dim *= 2.0;  // both chiralities
  return std::llround(dim);
}

std::vector<double> sphere_spectrum(int n, double radius, int p, double cutoff) {
  check_cutoff(cutoff);
  if (n < 1) throw DomainError("sphere dimension must be positive");
  if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
  if (p < 0 || p > n) throw DomainError("form degree out of range for the sphere");
  const double r2 = radius * radius;

  std::vector<double> out;
  if (p == 0 || p == n) out.push_back(0.0);
  for (int k = 1;; ++k) {
    bool any = false;
    if (p <= n - 1) {
      const double ev = double(k + p) * (k + n - p - 1) / r2;
      if (ev <= cutoff) {
        append(out, ev, sphere_coclosed_multiplicity(n, p, k));
        any = true;
      }
    }
    if (p >= 1) {
      const double ev = double(k + p - 1) * (k + n - p) / r2;
      if (ev <= cutoff) {
        append(out, ev, sphere_coclosed_multiplicity(n, p - 1, k));
        any = true;
      }
    }
    if (!any) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cornerspec
