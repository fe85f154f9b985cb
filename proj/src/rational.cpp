#include "faberkit/rational.hpp"

namespace faberkit {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational out(1);
  Rational base = *this;
  for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
    if (k & 1UL) out *= base;
    base *= base;
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const Integer n = r.num();
  const Integer d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(sn, sd);
  return true;
}

Rational pochhammer(const Rational& x, unsigned n) {
  Rational out(1);
  for (unsigned k = 0; k < n; ++k) out *= x + Rational(static_cast<long>(k));
  return out;
}

}  // namespace faberkit
