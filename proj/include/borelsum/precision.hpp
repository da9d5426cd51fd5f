#pragma once

namespace borelsum {

class Real;

// Working precision shared by every numerical operation of a computation.
class PrecisionConfig {
 public:
  static constexpr unsigned kMinBits = 53;
  static constexpr unsigned kMaxBits = 2048;

  explicit PrecisionConfig(unsigned mantissa_bits = 256, double default_tolerance = 1e-30);

  unsigned mantissa_bits() const { return bits_; }
  double default_tolerance() const { return tolerance_; }

  // 2^(1 - mantissa_bits)
  Real epsilon() const;
  PrecisionConfig doubled() const;

 private:
  unsigned bits_;
  double tolerance_;
};

}  // namespace borelsum
