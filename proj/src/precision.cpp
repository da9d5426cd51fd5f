#include "borelsum/precision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "borelsum/real.hpp"

namespace borelsum {

PrecisionConfig::PrecisionConfig(unsigned mantissa_bits, double default_tolerance)
    : bits_(mantissa_bits), tolerance_(default_tolerance) {
  if (bits_ < kMinBits || bits_ > kMaxBits) {
    throw std::invalid_argument("mantissa_bits must lie in [" + std::to_string(kMinBits) + ", " +
                                std::to_string(kMaxBits) + "], got " + std::to_string(bits_));
  }
  if (!(tolerance_ > 0.0) || !std::isfinite(tolerance_)) {
    throw std::invalid_argument("default_tolerance must be positive and finite");
  }
}

Real PrecisionConfig::epsilon() const {
  Real one(1L, bits_);
  return ldexp(one, 1 - static_cast<long>(bits_));
}

PrecisionConfig PrecisionConfig::doubled() const {
  return PrecisionConfig(std::min(2 * bits_, kMaxBits), tolerance_);
}

}  // namespace borelsum
