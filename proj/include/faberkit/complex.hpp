#pragma once

#include <concepts>
#include <ostream>
#include <string>

#include "faberkit/error.hpp"
#include "faberkit/qsqrt5.hpp"
#include "faberkit/rational.hpp"

namespace faberkit {

// re + im*i over an exact real field T (Rational or QSqrt5).
template <typename T>
class Complex {
 public:
  Complex() = default;
  Complex(const T& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Complex(long re) : re_(re) {}      // NOLINT(google-explicit-constructor)
  Complex(int re) : re_(re) {}       // NOLINT(google-explicit-constructor)
  Complex(T re, T im) : re_(std::move(re)), im_(std::move(im)) {}

  // Widening conversion, e.g. Complex<Rational> -> Complex<QSqrt5>.
  template <typename U>
  explicit Complex(const Complex<U>& o) : re_(T(o.re())), im_(T(o.im())) {}

  static Complex zero() { return Complex(); }
  static Complex one() { return Complex(1); }
  static Complex i() { return Complex(T(0), T(1)); }

  const T& re() const { return re_; }
  const T& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Complex conj() const { return Complex(re_, -im_); }
  // |z|^2, exact in T.
  T norm() const { return re_ * re_ + im_ * im_; }
  Complex inverse() const {
    if (is_zero()) throw DomainError("division by zero in complex field");
    const T n = norm();
    return Complex(re_ / n, -im_ / n);
  }
  Complex pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Complex out(1);
    Complex base = *this;
    for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
      if (k & 1UL) out *= base;
      base *= base;
    }
    return out;
  }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    return "(" + re_.str() + ")+(" + im_.str() + ")i";
  }

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o) {
    T re = re_ * o.re_ - im_ * o.im_;
    T im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Complex& operator/=(const Complex& o) { return *this *= o.inverse(); }

  friend Complex operator+(Complex x, const Complex& y) { return x += y; }
  friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
  friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
  friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
  friend Complex operator-(const Complex& x) { return Complex(-x.re_, -x.im_); }
  friend bool operator==(const Complex& x, const Complex& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& x) { return os << x.str(); }

 private:
  T re_{};
  T im_{};
};

using ComplexRational = Complex<Rational>;
// Q(sqrt5, i): the field in which Schwarz coefficients for complex gamma live.
using ComplexQ5 = Complex<QSqrt5>;

// Coefficient-field contract shared by the series code.
template <typename F>
concept Field = requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  F(0);
  F(1);
};

// Embeddings into the widest field.
inline ComplexQ5 to_complex_q5(const Rational& x) { return ComplexQ5(QSqrt5(x)); }
inline ComplexQ5 to_complex_q5(const QSqrt5& x) { return ComplexQ5(x); }
inline ComplexQ5 to_complex_q5(const ComplexRational& x) { return ComplexQ5(x); }
inline ComplexQ5 to_complex_q5(const ComplexQ5& x) { return x; }

}  // namespace faberkit
