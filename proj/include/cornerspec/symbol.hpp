#pragma once

#include <complex>
#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "cornerspec/errors.hpp"

namespace cornerspec {

// Scalar symbol a(ξ) on covectors, with its order and an accumulated
// adiabatic scale: evaluation is a(scale · ξ).
template <typename Scalar = double>
class ScalarSymbol {
 public:
  using Covector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Function = std::function<Scalar(const Covector&)>;

  ScalarSymbol(Function a, Scalar order) : a_(std::move(a)), order_(order) {}

  Scalar operator()(const Covector& xi) const {
    if (scale_ == Scalar(1)) return a_(xi);
    return a_(Covector(scale_ * xi));
  }
  Scalar order() const { return order_; }
  Scalar scale() const { return scale_; }

  // a_t(ξ) = a(tξ); composing rescalings multiplies the scales.
  friend ScalarSymbol rescale_symbol(const ScalarSymbol& a, Scalar t) {
    if (!(t > Scalar(0))) throw DomainError("rescaling parameter must be positive");
    ScalarSymbol out = a;
    out.scale_ = a.scale_ * t;
    return out;
  }

 private:
  Function a_;
  Scalar order_;
  Scalar scale_ = Scalar(1);
};

template <typename Scalar>
struct CayleyCheck {
  std::complex<Scalar> value;  // (a(tξ) + i) / (a(tξ) - i)
  Scalar deviation = 0;        // |value - 1|
  Scalar bound = 0;            // 2 / a(tξ)
  bool limit_claimed = false;  // only positive-order symbols tend to 1
};

// Symbol of the Cayley transform of an elliptic positive symbol at t_max·ξ.
template <typename Scalar>
CayleyCheck<Scalar> cayley_symbol_limit(const ScalarSymbol<Scalar>& a,
                                        const typename ScalarSymbol<Scalar>::Covector& xi,
                                        Scalar t_max) {
  using Covector = typename ScalarSymbol<Scalar>::Covector;
  if (!(t_max > Scalar(0))) throw DomainError("t_max must be positive");
  const Scalar norm = xi.norm();
  if (!(norm > Scalar(0))) throw DomainError("covector must be nonzero");
  const Covector unit = xi / norm;
  if (!(a(unit) > Scalar(0))) throw DomainError("symbol is not positive on the unit sphere (non-elliptic)");
  const Scalar x = a(Covector(t_max * unit));
  if (!(x > Scalar(0))) throw DomainError("symbol vanishes at the sample point (non-elliptic)");

  const std::complex<Scalar> i(0, 1);
  CayleyCheck<Scalar> out;
  out.value = (x + i) / (x - i);
  out.deviation = std::abs(out.value - Scalar(1));
  out.bound = Scalar(2) / x;
  out.limit_claimed = a.order() > Scalar(0);
  return out;
}

}  // namespace cornerspec
