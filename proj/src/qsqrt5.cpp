#include "faberkit/qsqrt5.hpp"

namespace faberkit {

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt5 QSqrt5::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(sqrt5)");
  const Rational n = norm();
  return QSqrt5(a_ / n, -b_ / n);
}

QSqrt5 QSqrt5::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QSqrt5 out(1);
  QSqrt5 base = *this;
  for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
    if (k & 1UL) out *= base;
    base *= base;
  }
  return out;
}

int QSqrt5::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins. a^2 == 5 b^2 is
  // impossible for b != 0.
  return a_ * a_ > Rational(5) * b_ * b_ ? sa : sb;
}

std::string QSqrt5::str() const {
  if (b_.is_zero()) return a_.str();
  return "(" + a_.str() + ")+(" + b_.str() + ")sqrt5";
}

QSqrt5 qsqrt5_field_op(const QSqrt5& x, const QSqrt5& y, FieldOp op) {
  switch (op) {
    case FieldOp::add: return x + y;
    case FieldOp::sub: return x - y;
    case FieldOp::mul: return x * y;
    case FieldOp::div: return x / y;
  }
  throw DomainError("unknown field operation");
}

}  // namespace faberkit
