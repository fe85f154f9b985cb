#pragma once

#include <ostream>
#include <string>

#include "faberkit/rational.hpp"

namespace faberkit {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
//
// The pair (a, b) is unique for every value because sqrt(5) is irrational,
// so equality is componentwise. Signs are decided with integer arithmetic.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QSqrt5(int a) : a_(a) {}              // NOLINT(google-explicit-constructor)
  QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt5 zero() { return QSqrt5(); }
  static QSqrt5 one() { return QSqrt5(1); }
  static QSqrt5 sqrt5() { return QSqrt5(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // a - b*sqrt5
  QSqrt5 conjugate() const { return QSqrt5(a_, -b_); }
  // (a + b sqrt5)(a - b sqrt5) = a^2 - 5 b^2, zero only for the zero element.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  QSqrt5 inverse() const;
  QSqrt5 pow(long e) const;
  QSqrt5 abs() const { return sign() < 0 ? -*this : *this; }

  // -1, 0 or +1.
  int sign() const;

  // "a" when rational, otherwise "(a)+(b)sqrt5".
  std::string str() const;

  QSqrt5& operator+=(const QSqrt5& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt5& operator-=(const QSqrt5& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o) { return *this *= o.inverse(); }

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
  friend QSqrt5 operator-(const QSqrt5& x) { return QSqrt5(-x.a_, -x.b_); }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  friend std::ostream& operator<<(std::ostream& os, const QSqrt5& x) { return os << x.str(); }

 private:
  Rational a_;
  Rational b_;
};

// Exact three-way comparison through the sign of the difference.
inline int compare(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign(); }

enum class FieldOp { add, sub, mul, div };

QSqrt5 qsqrt5_field_op(const QSqrt5& x, const QSqrt5& y, FieldOp op);

}  // namespace faberkit
