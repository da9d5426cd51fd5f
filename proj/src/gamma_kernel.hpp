#pragma once

#include "borelsum/complex.hpp"
#include "borelsum/precision.hpp"

namespace borelsum::detail {

// t -> Gamma(w) Gamma(t) / Gamma(w + t) for real t > 0, with ln Gamma(w) computed once.
class GammaKernel {
 public:
  GammaKernel(const Complex& w, const PrecisionConfig& config);

  Complex operator()(const Real& t) const;
  const Complex& base() const { return w_; }
  // |Gamma(w)|
  Real abs_gamma_base() const;

 private:
  PrecisionConfig work_;
  unsigned bits_;
  Complex w_;
  Complex log_gamma_w_;
};

}  // namespace borelsum::detail
