#pragma once

#include "borelsum/complex.hpp"
#include "borelsum/precision.hpp"

namespace borelsum {

// Principal branch of ln Gamma(z), continuous off the cut (-inf, 0].
// Throws PoleError at nonpositive integers.
Complex log_gamma(const Complex& z, const PrecisionConfig& config);

// ln Gamma(x) for real x > 0.
Real log_gamma(const Real& x, const PrecisionConfig& config);

// 1/Gamma(x); exactly zero at nonpositive integers.
Real reciprocal_gamma(const Real& x, const PrecisionConfig& config);

// Gamma(z) Gamma(s+n) / Gamma(z+s+n) through log-Gamma differences.
// Requires s > 0, or s = 0 with n >= 1.
Complex gamma_ratio(const Complex& z, unsigned long n, const Real& s, const PrecisionConfig& config);

// Number of Stirling-series Bernoulli terms available to log_gamma.
unsigned stirling_series_terms();

}  // namespace borelsum
