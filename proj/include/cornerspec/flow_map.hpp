#pragma once

namespace cornerspec {

// Model flow of the weighted half-line calculus with weight l >= 1:
//   ψ_1(x) = ln x,  ψ_l(x) = x + x^{1-l}/(1-l) for l > 1,
//   φ_l(t, x) = ψ_l^{-1}(ψ_l(x) + t),  φ_l(t, 0) = 0.
class FlowMap {
 public:
  explicit FlowMap(int l);
  int weight() const { return l_; }

 private:
  int l_;
};

double psi(const FlowMap& f, double x);

// For l = 1 the closed form e^t x; otherwise ψ_l is inverted by safeguarded
// Newton iteration on ln y inside a bisection bracket.
double phi(const FlowMap& f, double t, double x);

}  // namespace cornerspec
