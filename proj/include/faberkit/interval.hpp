#pragma once

#include <mpfr.h>

#include <string>

#include "faberkit/complex.hpp"
#include "faberkit/qsqrt5.hpp"
#include "faberkit/rational.hpp"

namespace faberkit {

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMaxPrecisionBits = 1024;

// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(unsigned bits = kDefaultPrecisionBits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal rendering with the given number of significant digits.
  std::string str(int digits) const;

 private:
  mpfr_t v_;
  bool live_ = true;
};

// Closed interval [lo, hi] with outward-rounded arithmetic. Every operation
// returns an enclosure of all results reachable from the operand enclosures.
class Interval {
 public:
  explicit Interval(unsigned bits = kDefaultPrecisionBits);
  Interval(const Rational& x, unsigned bits);
  Interval(const QSqrt5& x, unsigned bits);
  Interval(BigFloat lo, BigFloat hi);

  static Interval from_double(double x, unsigned bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  unsigned precision() const { return lo_.precision(); }

  BigFloat midpoint() const;
  // Upper bound on |midpoint - x| over the enclosure, strictly positive.
  BigFloat radius() const;

  bool contains_zero() const;
  bool contains(const Interval& o) const;
  // True when every point of *this is < every point of o.
  bool certainly_less(const Interval& o) const;
  bool certainly_positive() const;
  bool certainly_negative() const;

  Interval sqrt() const;
  Interval abs() const;
  Interval square() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

// Rectangular complex enclosure.
struct ComplexInterval {
  Interval re;
  Interval im;

  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  ComplexInterval(const ComplexQ5& z, unsigned bits) : re(z.re(), bits), im(z.im(), bits) {}

  Interval norm() const { return re.square() + im.square(); }
  Interval abs() const { return norm().sqrt(); }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
};

// A float value with a guaranteed bound on its distance to the exact value.
struct Approximation {
  BigFloat value;
  BigFloat error_bound;

  explicit Approximation(const Interval& enclosure)
      : value(enclosure.midpoint()), error_bound(enclosure.radius()) {}
};

Approximation to_float(const Rational& x, unsigned bits);
Approximation to_float(const QSqrt5& x, unsigned bits);

// Complex values are reported componentwise.
struct ComplexApproximation {
  Approximation re;
  Approximation im;
};
ComplexApproximation to_float(const ComplexQ5& x, unsigned bits);
inline ComplexApproximation to_float(const ComplexRational& x, unsigned bits) {
  return to_float(ComplexQ5(x), bits);
}

// Significant decimal digits that a given binary precision carries.
int decimal_digits(unsigned bits);

}  // namespace faberkit
