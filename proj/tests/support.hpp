#pragma once

// Test-only generators and oracles. Nothing here calls the library's
// series or partition code, so the oracles stay independent of the paths
// they check.

#include <cstdint>
#include <random>
#include <vector>

#include "faberkit/complex.hpp"
#include "faberkit/qsqrt5.hpp"
#include "faberkit/rational.hpp"

namespace faberkit::testing {

// numerator in [-bound, bound], denominator in [1, bound]
inline Rational random_rational(std::mt19937_64& rng, long bound = 100) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline QSqrt5 random_qsqrt5(std::mt19937_64& rng, long bound = 20) {
  return QSqrt5(random_rational(rng, bound), random_rational(rng, bound));
}

inline ComplexRational random_complex_rational(std::mt19937_64& rng, long bound = 20) {
  return ComplexRational(random_rational(rng, bound), random_rational(rng, bound));
}

// Coefficients c_0..c_N of a random normalized series (c_0 = 0, c_1 = 1).
inline std::vector<Rational> random_normalized_coeffs(std::mt19937_64& rng, std::size_t N, long bound = 100) {
  std::vector<Rational> c{Rational(0), Rational(1)};
  for (std::size_t n = 2; n <= N; ++n) c.push_back(random_rational(rng, bound));
  return c;
}

// Naive truncated polynomial product.
template <typename F>
std::vector<F> naive_mul(const std::vector<F>& a, const std::vector<F>& b, std::size_t N) {
  std::vector<F> out(N + 1, F(0));
  for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

// [z^n] (a_1 z + a_2 z^2 + ...)^m by repeated naive multiplication.
template <typename F>
F power_coefficient_oracle(unsigned n, unsigned m, const std::vector<F>& a_from_1) {
  std::vector<F> base(n + 1, F(0));
  for (std::size_t i = 0; i < a_from_1.size() && i + 1 <= n; ++i) base[i + 1] = a_from_1[i];
  std::vector<F> acc(n + 1, F(0));
  acc[0] = F(1);
  for (unsigned k = 0; k < m; ++k) acc = naive_mul(acc, base, n);
  return acc[n];
}

// Exhaustive scan over every multiplicity vector with delta_i <= n / i,
// keeping those with sum delta = m and sum i delta_i = n.
template <typename F>
F brute_force_bell(unsigned n, unsigned m, const std::vector<F>& a_from_1) {
  std::vector<unsigned> delta(n, 0);
  F sum(0);
  for (;;) {
    unsigned parts = 0, weight = 0;
    for (unsigned i = 0; i < n; ++i) {
      parts += delta[i];
      weight += (i + 1) * delta[i];
    }
    if (parts == m && weight == n) {
      Integer mult;
      mpz_fac_ui(mult.get_mpz_t(), m);
      F term(0);
      Integer den = 1;
      for (unsigned i = 0; i < n; ++i) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), delta[i]);
        den *= f;
      }
      term = F(Rational(mult, den));
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned k = 0; k < delta[i]; ++k) term = term * a_from_1[i];
      }
      sum = sum + term;
    }
    // odometer
    unsigned pos = 0;
    while (pos < n) {
      if (delta[pos] < n / (pos + 1)) {
        ++delta[pos];
        break;
      }
      delta[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return sum;
}

}  // namespace faberkit::testing
