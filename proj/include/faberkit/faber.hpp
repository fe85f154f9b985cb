#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "faberkit/rational.hpp"
#include "faberkit/series.hpp"

namespace faberkit {

// Multiplicities delta_1..delta_n of a partition of n into m parts
// (delta_i copies of part i): sum delta_i = m, sum i*delta_i = n.
struct Partition {
  std::vector<unsigned> multiplicity;  // index i-1 holds delta_i

  unsigned parts() const;
  unsigned total() const;
  // m! / (delta_1! ... delta_n!)
  Integer multinomial() const;
};

// All partitions of n into exactly m parts. Results are cached per (n, m);
// the cache is safe to share between threads.
const std::vector<Partition>& partitions(unsigned n, unsigned m);

// Falling-factorial binomial p (p-1) ... (p-m+1) / m!, defined for every
// integer p including negative ones.
Rational binomial(long p, unsigned m);

// G_n^m(a_1..a_n) = sum over partitions of n into m parts of
// m! prod a_i^delta_i / prod delta_i!. Equivalently the z^n coefficient of
// (a_1 z + a_2 z^2 + ...)^m. `a[0]` holds a_1.
template <Field F>
F bell_G(unsigned n, unsigned m, std::span<const F> a) {
  if (n < 1 || m < 1 || m > n) throw DomainError("bell_G requires 1 <= m <= n");
  if (a.size() < n) throw DomainError("bell_G needs coefficients a_1..a_n");
  F sum(0);
  for (const Partition& part : partitions(n, m)) {
    F term(Rational(part.multinomial()));
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned k = 0; k < part.multiplicity[i]; ++k) term *= a[i];
    }
    sum += term;
  }
  return sum;
}

template <Field F>
F bell_G(unsigned n, unsigned m, const std::vector<F>& a) {
  return bell_G<F>(n, m, std::span<const F>(a));
}

// Faber coefficient K_n^p of a normalized f = z + a_2 z^2 + ...:
//   K_n^p = sum_{m=1}^{n} binom(p, m) G_n^m(a_2, ..., a_{n+1}),
// i.e. the z^n coefficient of (f(z)/z)^p. `a` holds a_1..a_{n+1} with a_1 = 1.
template <Field F>
F faber_K(unsigned n, long p, std::span<const F> a) {
  if (n < 1) throw DomainError("faber_K requires n >= 1");
  if (a.size() < n + 1) throw DomainError("faber_K needs coefficients a_1..a_{n+1}");
  if (!(a[0] == F(1))) throw DomainError("faber_K requires a normalized series (a_1 = 1)");
  const std::span<const F> shifted = a.subspan(1, n);
  F sum(0);
  for (unsigned m = 1; m <= n; ++m) {
    const Rational c = binomial(p, m);
    if (c.is_zero()) continue;
    sum += F(c) * bell_G<F>(n, m, shifted);
  }
  return sum;
}

template <Field F>
F faber_K(unsigned n, long p, const NormalizedSeries<F>& f) {
  if (f.order() < n + 1) throw DomainError("faber_K: series order too small");
  const auto& c = f.series().coeffs();
  return faber_K<F>(n, p, std::span<const F>(c).subspan(1, n + 1));
}

// Coefficients of g = f^{-1}: b_n = K_{n-1}^{-n}(a_2, ..., a_n) / n.
template <Field F>
TruncatedSeries<F> inverse_coeffs_faber(const NormalizedSeries<F>& f) {
  const std::size_t N = f.order();
  TruncatedSeries<F> g = TruncatedSeries<F>::identity(N);
  const auto& c = f.series().coeffs();
  for (std::size_t n = 2; n <= N; ++n) {
    const auto a = std::span<const F>(c).subspan(1, n);  // a_1..a_n
    g[n] = faber_K<F>(static_cast<unsigned>(n - 1), -static_cast<long>(n), a) /
           F(static_cast<long>(n));
  }
  return g;
}

// Under a_m = 0 for 2 <= m <= n-1 the n-th inverse coefficient is -a_n.
template <Field F>
F gap_inverse_relation(unsigned /*n*/, const F& a_n) {
  return -a_n;
}

// z + a_n z^n of the given order (a_2 = ... = a_{n-1} = 0, higher terms 0).
template <Field F>
NormalizedSeries<F> gap_series(unsigned n, const F& a_n, std::size_t order) {
  if (n < 2 || order < n) throw DomainError("gap_series requires 2 <= n <= order");
  TruncatedSeries<F> s = TruncatedSeries<F>::identity(order);
  s[n] = a_n;
  return NormalizedSeries<F>(std::move(s));
}

}  // namespace faberkit
