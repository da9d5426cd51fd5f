#include <vector>

#include "borelsum/oracle.hpp"

namespace borelsum {

namespace {

using Series = std::vector<Real>;

Series multiply(const Series& a, const Series& b, std::size_t K, unsigned bits) {
  Series c(K, Real(0L, bits));
  for (std::size_t i = 0; i < K && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < K && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series inverse(const Series& a, std::size_t K, unsigned bits) {
  Series b(K, Real(0L, bits));
  b[0] = Real(1L, bits) / a[0];
  for (std::size_t n = 1; n < K; ++n) {
    Real s(0L, bits);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * b[n - k];
    b[n] = -s / a[0];
  }
  return b;
}

// Root tau(u) = 1 + O(u) of tau^3 - 2 c u tau - 1 = 0 by Newton iteration on truncated series.
Series cubic_root_series(const Real& c, std::size_t K, unsigned bits) {
  Series tau(K, Real(0L, bits));
  tau[0] = Real(1L, bits);
  for (std::size_t correct = 1; correct < 2 * K; correct *= 2) {
    Series t2 = multiply(tau, tau, K, bits);
    Series t3 = multiply(t2, tau, K, bits);
    Series f(K, Real(0L, bits)), df(K, Real(0L, bits));
    for (std::size_t i = 0; i < K; ++i) {
      f[i] = t3[i];
      df[i] = 3L * t2[i];
    }
    f[0] -= 1L;
    for (std::size_t i = 1; i < K; ++i) f[i] -= 2L * c * tau[i - 1];
    if (K > 1) df[1] -= 2L * c;
    Series step = multiply(f, inverse(df, K, bits), K, bits);
    for (std::size_t i = 0; i < K; ++i) tau[i] -= step[i];
  }
  return tau;
}

}  // namespace

// Phi = e^{-z} z^{-1/6} psi(z) with z = (2/3) x^{3/2} - 2 x^{1/2} turns
// Phi'' = (x - 2 - 3/x + 4/x^2) Phi into
//   psi'' - psi'/(3z) + (7/36) psi/z^2 + (p - 2)(psi' - psi/(6z)) + (q - p) psi = 0,
// where, with w = z^{-1/3}, c = (3/2)^{1/3}, tau^3 - 2 c w^2 tau = 1 and X = c^2 tau^2,
//   p = (X + w^2) w^3 / (2 c tau (X - w^2)^2),   q = 4 w^4 / (X (X - w^2)).
// A monomial w^k is mapped to w^k E_k(w),
//   E_k = alpha_k w^6 + ((2k+1)/3) w^3 - (k/3 + 1/6) w^3 p + q - p,  alpha_k = k^2/9 + 4k/9 + 7/36,
// and the coefficient of w^{n+3} gives (2n/3) a_n = -sum_{k<n} a_k [E_k]_{n+3-k}.
FormalSeries psi_series(std::size_t depth, const PrecisionConfig& config) {
  const unsigned out_bits = config.mantissa_bits();
  const unsigned bits = out_bits + 64;
  const std::size_t K = depth / 2 + 3;
  const Real c = cbrt(Real(3L, bits) / 2L);

  Series tau = cubic_root_series(c, K, bits);
  Series X = multiply(tau, tau, K, bits);
  for (auto& x : X) x *= c * c;
  Series x_plus = X, x_minus = X;
  if (K > 1) {
    x_plus[1] += 1L;
    x_minus[1] -= 1L;
  }
  Series two_c_tau = tau;
  for (auto& t : two_c_tau) t *= 2L * c;
  Series den = multiply(two_c_tau, multiply(x_minus, x_minus, K, bits), K, bits);
  Series r = multiply(x_plus, inverse(den, K, bits), K, bits);
  Series s = inverse(multiply(X, x_minus, K, bits), K, bits);

  const std::size_t J = depth + 4;
  Series p(J, Real(0L, bits)), q(J, Real(0L, bits));
  for (std::size_t i = 0; i < K; ++i) {
    if (3 + 2 * i < J) p[3 + 2 * i] = r[i];
    if (4 + 2 * i < J) q[4 + 2 * i] = 4L * s[i];
  }

  auto e_coefficient = [&](std::size_t k, std::size_t j) {
    Real v = q[j] - p[j];
    const long kk = static_cast<long>(k);
    if (j == 6) v += Real(4L * kk * kk + 16L * kk + 7L, bits) / 36L;
    if (j == 3) v += Real(2L * kk + 1L, bits) / 3L;
    if (j >= 3) v -= Real(2L * kk + 1L, bits) / 6L * p[j - 3];
    return v;
  };

  Series a(depth + 1, Real(0L, bits));
  a[0] = Real(1L, bits);
  for (std::size_t n = 1; n <= depth; ++n) {
    Real sum(0L, bits);
    for (std::size_t k = 0; k < n; ++k) sum += a[k] * e_coefficient(k, n + 3 - k);
    a[n] = -sum * 3L / static_cast<long>(2 * n);
  }

  std::vector<Complex> coeffs;
  coeffs.reserve(depth + 1);
  for (const auto& v : a) coeffs.emplace_back(v.with_precision(out_bits), Real(0L, out_bits));
  return FormalSeries(3, std::move(coeffs));
}

}  // namespace borelsum
