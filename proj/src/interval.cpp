#include "faberkit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace faberkit {

BigFloat::BigFloat(unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Steal the limbs; leave `o` in a destructible state.
  v_[0] = o.v_[0];
  o.live_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    if (live_) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    } else {
      mpfr_init2(v_, mpfr_get_prec(o.v_));
      live_ = true;
    }
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    if (live_) mpfr_clear(v_);
    v_[0] = o.v_[0];
    live_ = true;
    o.live_ = false;
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (live_) mpfr_clear(v_);
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

unsigned max_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

BigFloat min_of(BigFloat a, const BigFloat& b) {
  if (mpfr_cmp(b.get(), a.get()) < 0) mpfr_set(a.get(), b.get(), MPFR_RNDD);
  return a;
}

BigFloat max_of(BigFloat a, const BigFloat& b) {
  if (mpfr_cmp(b.get(), a.get()) > 0) mpfr_set(a.get(), b.get(), MPFR_RNDU);
  return a;
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Corner evaluation for monotone-per-argument ops (mul, div).
Interval corners(const Interval& a, const Interval& b, BinaryOp op) {
  const unsigned bits = max_prec(a, b);
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  BigFloat lo(bits), hi(bits);
  bool first = true;
  for (const auto* x : xs) {
    for (const auto* y : ys) {
      BigFloat d(bits), u(bits);
      op(d.get(), x->get(), y->get(), MPFR_RNDD);
      op(u.get(), x->get(), y->get(), MPFR_RNDU);
      if (first) {
        lo = d;
        hi = u;
        first = false;
      } else {
        lo = min_of(std::move(lo), d);
        hi = max_of(std::move(hi), u);
      }
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval::Interval(unsigned bits) : lo_(bits), hi_(bits) {}

Interval::Interval(const Rational& x, unsigned bits) : lo_(bits), hi_(bits) {
  mpfr_set_q(lo_.get(), x.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), x.raw().get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const QSqrt5& x, unsigned bits) : lo_(bits), hi_(bits) {
  if (x.is_rational()) {
    *this = Interval(x.rational_part(), bits);
    return;
  }
  *this = Interval(x.rational_part(), bits) + Interval(x.sqrt5_part(), bits) * Interval(Rational(5), bits).sqrt();
}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::from_double(double x, unsigned bits) {
  BigFloat v(bits);
  mpfr_set_d(v.get(), x, MPFR_RNDN);  // exact for bits >= 53
  return Interval(v, v);
}

BigFloat Interval::midpoint() const {
  BigFloat m(precision() + 2);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

BigFloat Interval::radius() const {
  const BigFloat m = midpoint();
  BigFloat up(precision()), down(precision());
  mpfr_sub(up.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(down.get(), m.get(), lo_.get(), MPFR_RNDU);
  BigFloat r = max_of(std::move(up), down);
  mpfr_nextabove(r.get());
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.lo_.get()) && mpfr_greaterequal_p(hi_.get(), o.hi_.get());
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_less_p(hi_.get(), o.lo_.get()); }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_.get()) < 0) throw DomainError("square root of a negative enclosure");
  BigFloat lo(precision()), hi(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_zero(lo.get(), 1);
  } else {
    mpfr_sqrt(lo.get(), lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(hi.get(), hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  BigFloat lo(precision()), neg(precision());
  mpfr_neg(neg.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), max_of(std::move(neg), hi_));
}

Interval Interval::square() const {
  const Interval a = abs();
  return a * a;
}

Interval operator+(const Interval& a, const Interval& b) {
  const unsigned bits = max_prec(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator-(const Interval& a) {
  BigFloat lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) { return corners(a, b, &mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing zero");
  return corners(a, b, &mpfr_div);
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  const Interval n = b.norm();
  if (n.contains_zero()) throw DomainError("complex division by an enclosure containing zero");
  const ComplexInterval num = a * ComplexInterval(b.re, -b.im);
  return {num.re / n, num.im / n};
}

namespace {

void require_precision(unsigned bits) {
  if (bits < 53) throw DomainError("precision must be at least 53 bits");
  if (bits > 1U << 20) throw DomainError("precision too large");
}

}  // namespace

Approximation to_float(const Rational& x, unsigned bits) {
  require_precision(bits);
  return Approximation(Interval(x, bits));
}

Approximation to_float(const QSqrt5& x, unsigned bits) {
  require_precision(bits);
  return Approximation(Interval(x, bits));
}

ComplexApproximation to_float(const ComplexQ5& x, unsigned bits) {
  require_precision(bits);
  return {Approximation(Interval(x.re(), bits)), Approximation(Interval(x.im(), bits))};
}

int decimal_digits(unsigned bits) { return static_cast<int>(std::floor(bits * 0.30102999566398120)); }

}  // namespace faberkit
