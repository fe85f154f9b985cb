#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "faberkit/complex.hpp"
#include "faberkit/error.hpp"

namespace faberkit {

// Power series c_0 + c_1 z + ... + c_N z^N known exactly up to order N.
// Coefficients above N are unknown, never implicitly zero: every operation
// yields a result valid only up to the order it reports.
template <Field F>
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, F(0)) {}
  explicit TruncatedSeries(std::vector<F> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("a truncated series needs at least one coefficient");
  }

  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = F(1);
    return s;
  }
  static TruncatedSeries constant(const F& v, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const F& operator[](std::size_t n) const { return c_.at(n); }
  F& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<F>& coeffs() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw DomainError("cannot extend a truncated series beyond its order");
    return TruncatedSeries(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<F> c_;
};

// f with f(0) = 0 and f'(0) = 1.
template <Field F>
class NormalizedSeries {
 public:
  explicit NormalizedSeries(TruncatedSeries<F> s) : s_(std::move(s)) {
    if (s_.order() < 1) throw DomainError("a normalized series needs order >= 1");
    if (!s_[0].is_zero() || !(s_[1] == F(1))) {
      throw DomainError("series is not normalized (requires c_0 = 0 and c_1 = 1)");
    }
  }
  // z + a_2 z^2 + ... from the list a_2, a_3, ...
  static NormalizedSeries from_tail(const std::vector<F>& tail) {
    std::vector<F> c{F(0), F(1)};
    c.insert(c.end(), tail.begin(), tail.end());
    return NormalizedSeries(TruncatedSeries<F>(std::move(c)));
  }

  const TruncatedSeries<F>& series() const { return s_; }
  std::size_t order() const { return s_.order(); }
  const F& operator[](std::size_t n) const { return s_[n]; }

  friend bool operator==(const NormalizedSeries& a, const NormalizedSeries& b) { return a.s_ == b.s_; }

 private:
  TruncatedSeries<F> s_;
};

namespace detail {
template <Field F>
void require_same_order(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b, const char* what) {
  if (a.order() != b.order()) {
    throw DomainError(std::string(what) + ": mismatched truncation orders " + std::to_string(a.order()) + " and " +
                      std::to_string(b.order()));
  }
}
}  // namespace detail

template <Field F>
TruncatedSeries<F> series_add(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  detail::require_same_order(a, b, "series_add");
  TruncatedSeries<F> out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

template <Field F>
TruncatedSeries<F> series_sub(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  detail::require_same_order(a, b, "series_sub");
  TruncatedSeries<F> out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

template <Field F>
TruncatedSeries<F> series_scale(const TruncatedSeries<F>& a, const F& k) {
  TruncatedSeries<F> out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] * k;
  return out;
}

// Cauchy product truncated at the shared order.
template <Field F>
TruncatedSeries<F> series_mul(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  detail::require_same_order(a, b, "series_mul");
  const std::size_t N = a.order();
  TruncatedSeries<F> out(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <Field F>
TruncatedSeries<F> series_pow(const TruncatedSeries<F>& a, unsigned k) {
  TruncatedSeries<F> out = TruncatedSeries<F>::constant(F(1), a.order());
  for (unsigned i = 0; i < k; ++i) out = series_mul(out, a);
  return out;
}

// f(w(z)) up to the shared order; w must have zero constant term.
template <Field F>
TruncatedSeries<F> series_compose(const TruncatedSeries<F>& f, const TruncatedSeries<F>& w) {
  detail::require_same_order(f, w, "series_compose");
  if (!w[0].is_zero()) throw DomainError("series_compose: inner series has a nonzero constant term");
  const std::size_t N = f.order();
  // Horner: f_0 + w (f_1 + w (f_2 + ...)).
  TruncatedSeries<F> acc = TruncatedSeries<F>::constant(f[N], N);
  for (std::size_t k = N; k-- > 0;) {
    acc = series_mul(acc, w);
    acc[0] += f[k];
  }
  return acc;
}

// Compositional inverse g with f(g(w)) = w, solved order by order: the w^n
// coefficient of f(g) equals g_n plus terms in g_1..g_{n-1} only.
template <Field F>
TruncatedSeries<F> series_revert(const NormalizedSeries<F>& f) {
  const std::size_t N = f.order();
  TruncatedSeries<F> g = TruncatedSeries<F>::identity(N);
  for (std::size_t n = 2; n <= N; ++n) {
    const TruncatedSeries<F> fg = series_compose(f.series(), g);
    g[n] = -fg[n];
  }
  return g;
}

// Termwise derivative. The result has order N - 1.
template <Field F>
TruncatedSeries<F> series_derivative(const TruncatedSeries<F>& f) {
  if (f.order() == 0) throw DomainError("series_derivative: order-0 series has no known derivative terms");
  TruncatedSeries<F> out(f.order() - 1);
  for (std::size_t n = 1; n <= f.order(); ++n) out[n - 1] = f[n] * F(static_cast<long>(n));
  return out;
}

// 1/f up to the order of f.
template <Field F>
TruncatedSeries<F> series_reciprocal(const TruncatedSeries<F>& f) {
  if (f[0].is_zero()) throw DomainError("series_reciprocal: zero constant term");
  const std::size_t N = f.order();
  TruncatedSeries<F> r(N);
  const F inv0 = F(1) / f[0];
  r[0] = inv0;
  for (std::size_t n = 1; n <= N; ++n) {
    F acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * r[n - k];
    r[n] = -acc * inv0;
  }
  return r;
}

// Coefficientwise field change, e.g. Rational -> ComplexQ5.
template <Field To, Field From, typename Conv>
TruncatedSeries<To> series_map(const TruncatedSeries<From>& s, Conv conv) {
  std::vector<To> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coeffs()) c.push_back(conv(x));
  return TruncatedSeries<To>(std::move(c));
}

template <Field From>
TruncatedSeries<ComplexQ5> to_complex_q5(const TruncatedSeries<From>& s) {
  return series_map<ComplexQ5>(s, [](const From& x) { return to_complex_q5(x); });
}

template <Field From>
NormalizedSeries<ComplexQ5> to_complex_q5(const NormalizedSeries<From>& s) {
  return NormalizedSeries<ComplexQ5>(to_complex_q5(s.series()));
}

}  // namespace faberkit
