#pragma once

#include <cstddef>
#include <vector>

#include "borelsum/complex.hpp"

namespace borelsum {

// sum_n a_n z^(-n/m), finitely many stored coefficients a_0..a_{max_index}.
class FormalSeries {
 public:
  // Throws DomainError if m == 0 or the coefficient list is empty.
  FormalSeries(unsigned m, std::vector<Complex> coefficients);

  unsigned m() const { return m_; }
  std::size_t max_index() const { return coefficients_.size() - 1; }
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  // Throws IndexError past max_index().
  const Complex& operator[](std::size_t n) const;
  // Throws IndexError naming `who` unless index n is stored.
  void require(std::size_t n, const char* who) const;
  unsigned precision() const;

 private:
  unsigned m_;
  std::vector<Complex> coefficients_;
};

// Point of the m-sheeted cover of C*: argument kept unreduced.
class RamifiedPoint {
 public:
  // Throws DomainError unless modulus > 0.
  RamifiedPoint(Real modulus, Real argument);

  const Real& modulus() const { return modulus_; }
  const Real& argument() const { return argument_; }
  // Argument reduced to (-pi, pi].
  Real projected_argument() const;
  // The point of C* underneath.
  Complex projection() const;
  // Same point of the m-sheeted cover: arguments equal modulo 2 pi m.
  bool same_point(const RamifiedPoint& other, unsigned m, const Real& tolerance) const;
  // z e^{i theta}
  RamifiedPoint rotated(const Real& theta) const { return RamifiedPoint(modulus_, argument_ + theta); }

 private:
  Real modulus_;
  Real argument_;
};

// modulus^(k/m) e^{i (k/m) argument}
Complex power(const RamifiedPoint& z, long k, unsigned m);

// a_n -> a_n e^{i n theta/m}, so that the result evaluated at z e^{i theta} equals f at z.
FormalSeries rotate(const FormalSeries& f, const Real& theta);

// a_n -> lambda^(n/m - 1) a_n. Throws DomainError unless lambda > 0.
FormalSeries scale(const FormalSeries& f, const Real& lambda);

struct BranchDecomposition {
  Complex constant;
  // branches[l-1] holds (0, a_l, a_{l+m}, a_{l+2m}, ...) as an m = 1 series.
  std::vector<FormalSeries> branches;
};

BranchDecomposition branch_split(const FormalSeries& f);

// a_0 + sum_l z^((m-l)/m) f_l(z) restricted to flat indices <= N.
Complex reassembled_partial_sum(const BranchDecomposition& parts, const RamifiedPoint& z, std::size_t N);

// sum_{k <= N} a_k z^(-k/m). Throws IndexError if N > max_index.
Complex partial_sum(const FormalSeries& f, const RamifiedPoint& z, std::size_t N);

// Constants of |f~(zeta)| <= A e^{B |zeta|} together with the region they hold on.
struct GrowthEnvelope {
  enum class Domain { strip, delta, omega };

  // Throws DomainError unless A, B and width are positive.
  GrowthEnvelope(Real A, Real B, Real width, Domain domain);

  Real A;
  Real B;
  // Strip half-width r, or the homothety factor lambda of Delta_lambda / Omega_lambda.
  Real width;
  Domain domain;
};

}  // namespace borelsum
