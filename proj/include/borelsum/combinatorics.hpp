#pragma once

#include <gmpxx.h>

#include <vector>

#include "borelsum/precision.hpp"
#include "borelsum/real.hpp"

namespace borelsum {

// Signed Stirling numbers of the first kind, prod_{k<n}(x-k) = sum_k s(n,k) x^k.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max);

  unsigned n_max() const { return n_max_; }
  // Throws IndexError when k > n or n > n_max.
  const mpz_class& operator()(unsigned n, unsigned k) const;

 private:
  unsigned n_max_;
  std::vector<std::vector<mpz_class>> rows_;
};

mpz_class stirling_first(unsigned n, unsigned k);

// Argument sequence x_1, x_2, ... of a partial Bell polynomial.
class BellArguments {
 public:
  // The sequence x_l = l!/(l+1) used by the generalized factorial series.
  static BellArguments factorial_over_successor(unsigned l_max);
  explicit BellArguments(std::vector<mpq_class> values);

  unsigned l_max() const { return static_cast<unsigned>(values_.size()); }
  // 1-based; throws IndexError past l_max.
  const mpq_class& operator()(unsigned l) const;

 private:
  std::vector<mpq_class> values_;
};

// Partial exponential Bell polynomials B_{j,p}(x_1, x_2, ...), 0 <= p <= j <= j_max.
class BellTable {
 public:
  BellTable(const BellArguments& args, unsigned j_max);

  unsigned j_max() const { return j_max_; }
  // Throws IndexError when p > j or j > j_max.
  const mpq_class& operator()(unsigned j, unsigned p) const;

 private:
  unsigned j_max_;
  std::vector<std::vector<mpq_class>> rows_;
};

// Throws IndexError unless 1 <= p <= j.
mpq_class bell_partial(unsigned j, unsigned p, const BellArguments& args);

// Coefficients d_{r,j} of 1/z^r = sum_j d_{r,j} Gamma(z)/Gamma(z+r+j), for rational r > 0.
// Exact: Gamma(r)/Gamma(r-p) and Gamma(r+j)/Gamma(r) are finite products of rationals.
class DCoefficientTable {
 public:
  explicit DCoefficientTable(unsigned j_max);

  unsigned j_max() const { return j_max_; }
  // Throws DomainError for r <= 0 and IndexError for j > j_max.
  mpq_class exact(const mpq_class& r, unsigned j) const;
  Real value(const mpq_class& r, unsigned j, const PrecisionConfig& config) const;

 private:
  unsigned j_max_;
  BellTable bell_;
  // weights_[j][p] = B_{j,p} * denominators_[j], integral.
  std::vector<std::vector<mpz_class>> weights_;
  std::vector<mpz_class> denominators_;
  std::vector<mpz_class> factorials_;
};

Real d_coefficient(const mpq_class& r, unsigned j, const PrecisionConfig& config);

}  // namespace borelsum
