#pragma once

#include <cstddef>
#include <vector>

#include "borelsum/combinatorics.hpp"
#include "borelsum/series.hpp"
#include "borelsum/summation_result.hpp"

namespace borelsum {

struct StirlingTransform {
  std::vector<Complex> b;
  // condition[n] = sum|terms of b_n| / |n! b_n|
  std::vector<double> condition;
};

// a = (a_1, ..., a_{N+1}) gives b_0..b_N with
// b_n = (1/n!) sum_{k=1}^{n+1} (-1)^{n-k+1} s(n,k-1) a_k.
StirlingTransform stirling_transform(const std::vector<Complex>& a, const StirlingTable& table,
                                     const PrecisionConfig& config);
StirlingTransform stirling_transform(const std::vector<Complex>& a, const PrecisionConfig& config);

// a_0 + lambda sum_n Gamma(lambda z) Gamma(n+1) b_n / Gamma(lambda z + n + 1)
class FactorialExpansion {
 public:
  // Stirling transform of the lambda-scaled a_1..a_depth, giving b_0..b_{depth-1}.
  // Throws DomainError unless f.m() == 1, IndexError if depth > f.max_index().
  static FactorialExpansion from_series(const FormalSeries& f, const Real& lambda, std::size_t depth,
                                        const PrecisionConfig& config);
  // Uses every stored coefficient.
  static FactorialExpansion from_series(const FormalSeries& f, const Real& lambda, const PrecisionConfig& config);

  const Real& lambda() const { return lambda_; }
  const Complex& a0() const { return a0_; }
  const std::vector<Complex>& b() const { return b_; }
  // Worst Stirling-transform condition number over b_0..b_{n_max} (all coefficients by default).
  double condition(std::size_t n_max = static_cast<std::size_t>(-1)) const;

 private:
  FactorialExpansion(Real lambda, Complex a0, std::vector<Complex> b, std::vector<double> condition);

  Real lambda_;
  Complex a0_;
  std::vector<Complex> b_;
  std::vector<double> condition_;
};

// Partial sum up to b_N. heuristic_error is the first omitted term's size when b_{N+1} exists;
// rigorous_bound is r_fact when an envelope is supplied.
// Throws IndexError if N >= b().size(), DomainError unless Re z > 0.
SummationResult factorial_series_sum(const FactorialExpansion& e, const Complex& z, std::size_t N,
                                     const PrecisionConfig& config, const GrowthEnvelope* envelope = nullptr);

// A e^{Br} n!/r^n / (|z|^n (Re z - B)). Throws DomainError unless Re z > B.
Real r_as(const Real& r, const Real& A, const Real& B, std::size_t n, const Complex& z, const PrecisionConfig& config);

// (A/(lambda B)^{lambda B}) (N+lambda B+1)^{N+lambda B+1}/(N+1)^N
//   |Gamma(lambda z) Gamma(N+1)/Gamma(lambda z+N+1)| / (Re z - B)
Real r_fact(const Real& lambda, const Real& A, const Real& B, std::size_t N, const Complex& z,
            const PrecisionConfig& config);

// A e^{lambda B (1 - ln lambda B)} / N^{lambda (Re z - B) - 1} |Gamma(lambda z)| / (Re z - B)
Real r_fact_asymptotic(const Real& lambda, const Real& A, const Real& B, std::size_t N, const Complex& z,
                       const PrecisionConfig& config);

// A (n+lambda B)^{n+lambda B} / ((lambda B)^{lambda B} n^n). Throws DomainError for n = 0.
Real b_bound(const Real& lambda, const Real& A, const Real& B, std::size_t n, const PrecisionConfig& config);

// floor(r |z|)
std::size_t least_term_index(const Real& r, const Complex& z);

struct BoundComparisonRow {
  std::size_t n;
  Real log_r_as_ln2;
  Real log_r_as_half_pi;
  Real log_r_fact;
};

// Natural logs of r_as(ln 2), r_as(pi/2) and r_fact(1) for n = 0..n_max.
std::vector<BoundComparisonRow> bound_comparison_table(const Real& A, const Real& B, const Complex& z,
                                                       std::size_t n_max, const PrecisionConfig& config);

}  // namespace borelsum
