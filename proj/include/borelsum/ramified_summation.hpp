#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "borelsum/classical_summation.hpp"
#include "borelsum/series.hpp"
#include "borelsum/summation_result.hpp"

namespace borelsum {

// Each branch f_l summed as a classical factorial series at the projection of z,
// reassembled as a_0 + sum_l z^((m-l)/m) s_0 f_l. Every branch is truncated at depth N.
// Throws IndexError when a branch lacks b_N, DomainError unless Re(projection) > 0.
SummationResult branch_sum(const FormalSeries& f, const Real& lambda, const RamifiedPoint& z, std::size_t N,
                           const PrecisionConfig& config);

struct GeneralizedCoefficients {
  // d[0] is unused and zero; d[n] for n = 1..n_max.
  std::vector<Complex> d;
  // sum|parts| / |a_n + correction| per index.
  std::vector<double> condition;
};

// d_n = (1/Gamma(n/m)) (a_n + sum_{l + j m = n, l, j >= 1} d_{l/m, j} a_l) for n = 1..n_max.
GeneralizedCoefficients generalized_coefficients(const FormalSeries& f, std::size_t n_max,
                                                 const PrecisionConfig& config);
GeneralizedCoefficients generalized_coefficients(const FormalSeries& f, const PrecisionConfig& config);

// a_0 + lambda sum_{n=1}^{N} Gamma(n/m) Gamma(lambda z) d_n / Gamma(lambda z + n/m) on lambda-scaled
// coefficients, at the projection of z. Throws IndexError if N > max_index.
SummationResult generalized_factorial_sum(const FormalSeries& f, const Real& lambda, const RamifiedPoint& z,
                                          std::size_t N, const PrecisionConfig& config);

// generalized_factorial_sum(rotate(f, theta), lambda, z e^{i theta}, N)
SummationResult rotated_generalized_sum(const FormalSeries& f, const Real& theta, const Real& lambda,
                                        const RamifiedPoint& z, std::size_t N, const PrecisionConfig& config);

// Optional constants (C, B) of the ramified least-term bound.
struct LeastTermConstants {
  Real C;
  Real B;
};

// Partial sum up to flat index m n with n = floor(r |z|); the heuristic error is
// max_l |a_{l+mn}| sum_{i<m} |z|^{i/m} / (|z|^n Re z').
// Throws IndexError if a_{m n + m} is not stored.
SummationResult least_term_sum_ramified(const FormalSeries& f, const Real& r, const RamifiedPoint& z,
                                        const PrecisionConfig& config,
                                        const std::optional<LeastTermConstants>& constants = std::nullopt);

// C e^{Br} n!/r^n sum_{i<m} |z|^{i/m} / (|z|^n (Re z' - B)), z' the projection of z.
// Throws DomainError unless Re z' > B.
Real r_as_ramified(const Real& r, const Real& C, const Real& B, std::size_t n, const RamifiedPoint& z, unsigned m,
                   const PrecisionConfig& config);

}  // namespace borelsum
