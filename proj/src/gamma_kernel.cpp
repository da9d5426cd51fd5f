#include "gamma_kernel.hpp"

#include <algorithm>

#include "borelsum/special_functions.hpp"

namespace borelsum::detail {

namespace {

PrecisionConfig widened(const PrecisionConfig& config) {
  return PrecisionConfig(std::min(config.mantissa_bits() + 16, PrecisionConfig::kMaxBits),
                         config.default_tolerance());
}

}  // namespace

GammaKernel::GammaKernel(const Complex& w, const PrecisionConfig& config)
    : work_(widened(config)),
      bits_(config.mantissa_bits()),
      w_(w.real().with_precision(work_.mantissa_bits()), w.imag().with_precision(work_.mantissa_bits())),
      log_gamma_w_(log_gamma(w_, work_)) {}

Complex GammaKernel::operator()(const Real& t) const {
  Real tw = t.with_precision(work_.mantissa_bits());
  Complex value = exp(log_gamma_w_ + Complex(log_gamma(tw, work_)) - log_gamma(w_ + tw, work_));
  return Complex(value.real().with_precision(bits_), value.imag().with_precision(bits_));
}

Real GammaKernel::abs_gamma_base() const { return exp(log_gamma_w_.real()).with_precision(bits_); }

}  // namespace borelsum::detail
